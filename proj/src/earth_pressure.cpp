#include "rcwall/earth_pressure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rcwall {

double seismic_inertia_angle(const SeismicCase& c) {
    if (!(c.kv < 1.0)) throw std::domain_error("vertical seismic coefficient must be below 1");
    return std::atan(c.kh / (1.0 - c.kv));
}

namespace {

std::optional<double> mo_active(double phi, double delta, double beta, double slope, double theta) {
    const double wedge = phi - theta - slope;
    if (wedge < 0) return std::nullopt;
    const double cdbt = std::cos(delta + beta + theta);
    const double cib = std::cos(slope - beta);
    if (cdbt <= 0 || cib <= 0) return std::nullopt;
    const double root = std::sqrt(std::sin(delta + phi) * std::sin(wedge) / (cdbt * cib));
    const double cb = std::cos(beta);
    const double num = std::cos(phi - theta - beta);
    return num * num / (std::cos(theta) * cb * cb * cdbt * (1.0 + root) * (1.0 + root));
}

std::optional<double> mo_passive(double phi, double delta, double beta, double theta) {
    const double wedge = phi - theta;
    if (wedge < 0) return std::nullopt;
    const double cdbt = std::cos(delta - beta + theta);
    const double cb = std::cos(beta);
    if (cdbt <= 0 || cb <= 0) return std::nullopt;
    const double root = std::sqrt(std::sin(phi + delta) * std::sin(wedge) / (cdbt * cb));
    if (root >= 1.0) return std::nullopt;
    const double num = std::cos(phi - theta + beta);
    return num * num / (std::cos(theta) * cb * cb * cdbt * (1.0 - root) * (1.0 - root));
}

} // namespace

std::optional<ActiveCoefficients> active_coefficients(double phi, double delta, double beta,
                                                      double slope, double theta) {
    auto kae = mo_active(phi, delta, beta, slope, theta);
    auto ka = mo_active(phi, delta, beta, slope, 0.0);
    if (!kae || !ka) return std::nullopt;
    return ActiveCoefficients{*ka, *kae};
}

std::optional<PassiveCoefficients> passive_coefficients(double phi, double delta, double beta,
                                                        double theta) {
    auto kpe = mo_passive(phi, delta, beta, theta);
    auto kp = mo_passive(phi, delta, beta, 0.0);
    if (!kpe || !kp) return std::nullopt;
    return PassiveCoefficients{*kp, *kpe};
}

double active_force(double kae, double gamma, double h, double kv) {
    return 0.5 * kae * gamma * h * h * (1.0 - kv);
}

double acting_height(double Pa, double dPae, double h) {
    const double total = Pa + dPae;
    if (total == 0.0) return h / 3.0;
    return (Pa * h / 3.0 + dPae * 0.6 * h) / total;
}

double active_pressure_height(const DesignVector& d, const DesignParameters& p) {
    const double heel = std::max(d.heel_length(), 0.0);
    return p.stem_height + d.base_thickness() + heel * std::tan(deg2rad(p.backfill_slope));
}

std::optional<PressureState> earth_forces(const DesignVector& d, const DesignParameters& p,
                                          const SeismicCase& c) {
    PressureState s;
    s.theta = seismic_inertia_angle(c);
    s.delta = deg2rad(p.wall_friction());
    s.h = active_pressure_height(d, p);

    auto active = active_coefficients(deg2rad(p.phi), s.delta, 0.0, deg2rad(p.backfill_slope), s.theta);
    // Level soil in front of the toe, no wall friction on the passive side.
    auto passive = passive_coefficients(deg2rad(p.phi_base), 0.0, 0.0, s.theta);
    if (!active || !passive) return std::nullopt;

    s.ka = active->ka;
    s.kae = active->kae;
    s.kp = passive->kp;
    s.kpe = passive->kpe;

    // Pae is assembled from its parts so Pae == Pa + dPae holds bit for bit.
    s.Pa = active_force(s.ka, p.gamma_soil, s.h, 0.0);
    s.dPae = 0.5 * p.gamma_soil * s.h * s.h * (s.kae * (1.0 - c.kv) - s.ka);
    s.Pae = s.Pa + s.dPae;
    s.hbar = acting_height(s.Pa, s.dPae, s.h);
    s.Pq = p.surcharge * s.kae * (1.0 - c.kv) * s.h;

    const double D = p.front_depth;
    s.Pp = active_force(s.kp, p.gamma_base, D, 0.0);
    s.Ppe = active_force(s.kpe, p.gamma_base, D, c.kv);
    s.dPpe = s.Pp - s.Ppe;
    const double Dk = D + d.key_height();
    s.Pk = 0.5 * s.kp * p.gamma_base * (Dk * Dk - D * D);
    return s;
}

} // namespace rcwall
