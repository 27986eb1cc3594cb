#include "rcwall/limit_states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rcwall {

bool ConstraintVector::feasible(double slack) const {
    return std::all_of(g.begin(), g.end(), [slack](double v) { return v <= slack; });
}

double ConstraintVector::max_violation() const {
    double worst = 0;
    for (double v : g) worst = std::max(worst, v);
    return worst;
}

BasePressures base_pressures(double sum_v, double width, double m_resisting, double m_overturning) {
    BasePressures out;
    out.e = width / 2.0 - (m_resisting - m_overturning) / sum_v;
    const double mean = sum_v / width;
    out.q_max = mean * (1.0 + 6.0 * out.e / width);
    out.q_min = mean * (1.0 - 6.0 * out.e / width);
    if (out.q_max < out.q_min) std::swap(out.q_max, out.q_min);
    return out;
}

ShearMoment section_capacities(double As_mm2, double d_mm, double b_mm, double fc, double fy) {
    constexpr double phi_v = 0.75;
    constexpr double phi_m = 0.9;
    ShearMoment out;
    out.Vn = phi_v * 0.17 * std::sqrt(fc) * b_mm * d_mm / 1000.0;
    out.a = As_mm2 * fy / (0.85 * fc * b_mm);
    if (!(d_mm > 0) || out.a >= d_mm) {
        out.valid = false;
        out.Mn = 0;
        return out;
    }
    out.Mn = phi_m * As_mm2 * fy * (d_mm - out.a / 2.0) / 1.0e6;
    return out;
}

BearingFactors bearing_factors(double phi_deg) {
    BearingFactors f;
    const double phi = deg2rad(phi_deg);
    if (phi_deg <= 1e-9) {
        f.Nc = std::numbers::pi + 2.0;
        f.Nq = 1.0;
        f.Ngamma = 0.0;
        return f;
    }
    const double t = std::tan(deg2rad(45.0 + phi_deg / 2.0));
    f.Nq = std::exp(std::numbers::pi * std::tan(phi)) * t * t;
    f.Nc = (f.Nq - 1.0) / std::tan(phi);
    f.Ngamma = (f.Nq - 1.0) * std::tan(1.4 * phi);
    return f;
}

double bearing_capacity(const DesignParameters& p, const DesignVector& d) {
    const double B = d.base_width();
    const double D = p.front_depth;
    const BearingFactors f = bearing_factors(p.phi_base);
    const double phi = deg2rad(p.phi_base);

    const double ratio = D / B <= 1.0 ? D / B : std::atan(D / B);
    double Fqd = 1.0;
    double Fcd = 1.0 + 0.4 * ratio;
    if (p.phi_base > 1e-9) {
        Fqd = 1.0 + 2.0 * std::tan(phi) * std::pow(1.0 - std::sin(phi), 2) * ratio;
        Fcd = Fqd - (1.0 - Fqd) / (f.Nc * std::tan(phi));
    }
    const double overburden = p.gamma_base * D;
    return p.cohesion_base * f.Nc * Fcd + overburden * f.Nq * Fqd + 0.5 * p.gamma_base * B * f.Ngamma;
}

namespace {

struct Load {
    double w;   // kN/m
    double x;   // lever arm from the toe, m
};

} // namespace

StabilityReport factors_of_safety(const PressureState& s, const DesignVector& d,
                                  const DesignParameters& p) {
    const double B = d.base_width();
    const double toe = d.toe_width();
    const double t_bot = d.stem_bottom();
    const double t_top = std::min(d.stem_top(), t_bot);
    const double heel = std::max(d.heel_length(), 0.0);
    const double H = p.stem_height;
    const double back = toe + t_bot;
    const double tan_i = std::tan(deg2rad(p.backfill_slope));
    const double gc = p.gamma_concrete;

    // Stem front face is battered; back face vertical.
    const Load loads[] = {
        {gc * t_top * H, back - t_top / 2.0},
        {gc * 0.5 * (t_bot - t_top) * H, toe + 2.0 / 3.0 * (t_bot - t_top)},
        {gc * B * d.base_thickness(), B / 2.0},
        {gc * d.key_width() * d.key_height(), d.key_offset() + d.key_width() / 2.0},
        {p.gamma_soil * heel * H, back + heel / 2.0},
        {p.gamma_soil * 0.5 * heel * heel * tan_i, back + 2.0 / 3.0 * heel},
        {p.surcharge * heel, back + heel / 2.0},
        {p.gamma_base * toe * std::max(p.front_depth - d.base_thickness(), 0.0), toe / 2.0},
    };

    StabilityReport r;
    const double thrust = s.total_thrust();
    const double thrust_h = thrust * std::cos(s.delta);
    const double thrust_v = thrust * std::sin(s.delta);

    double sum_w = thrust_v;
    double m_r = thrust_v * B;
    for (const Load& l : loads) {
        sum_w += l.w;
        m_r += l.w * l.x;
    }
    r.vertical = sum_w;
    r.moment_resisting = m_r;
    r.moment_overturning = (s.Pae * s.hbar + s.Pq * s.h / 2.0) * std::cos(s.delta);

    r.force_driving = thrust_h;
    r.force_resisting = sum_w * std::tan(deg2rad(2.0 * p.phi_base / 3.0)) +
                        2.0 * B * p.cohesion_base / 3.0 + s.passive_toe() + s.Pk;

    r.fs_overturning = r.moment_overturning > 0 ? r.moment_resisting / r.moment_overturning : kInfiniteSafety;
    r.fs_sliding = r.force_driving > 0 ? r.force_resisting / r.force_driving : kInfiniteSafety;

    const BasePressures bp = base_pressures(sum_w, B, r.moment_resisting, r.moment_overturning);
    r.eccentricity = bp.e;
    r.q_toe = sum_w / B * (1.0 + 6.0 * bp.e / B);
    r.q_heel = sum_w / B * (1.0 - 6.0 * bp.e / B);
    r.q_max = bp.q_max;
    r.q_min = bp.q_min;
    r.q_ultimate = bearing_capacity(p, d);
    r.fs_bearing = r.q_max > 0 ? 1.33 * r.q_ultimate / r.q_max : kInfiniteSafety;
    return r;
}

SlabDemands slab_demands(const StabilityReport& r, const DesignVector& d, const DesignParameters& p) {
    SlabDemands out;
    const double B = d.base_width();
    const double X5 = d.base_thickness();
    const double toe = d.toe_width();
    const double heel = std::max(d.heel_length(), 0.0);
    const double junction_heel = toe + d.stem_bottom();
    out.dt = X5 - p.cover;
    out.dh = X5 - p.cover;

    auto q_at = [&](double x) { return r.q_toe + (r.q_heel - r.q_toe) * x / B; };
    const double q2 = q_at(toe);
    const double q_dt = q_at(std::max(toe - out.dt, 0.0));
    const double q_l = q_at(junction_heel);
    const double q_dh = q_at(std::min(junction_heel + out.dh, B));

    const double gc = p.gamma_concrete;
    const double gs = p.gamma_soil;
    const double self = 0.9 * (gc * X5 + gs * p.front_depth);
    out.Mt = std::max((1.7 * (q2 / 6.0 + r.q_toe / 3.0) - self) * toe * toe, 0.0);
    out.Vt = std::max((1.7 * (q_dt + r.q_toe) / 2.0 - self) * std::max(toe - out.dt, 0.0), 0.0);

    const double tan_i = std::tan(deg2rad(p.backfill_slope));
    const double w_bs = gs * heel * tan_i;
    const double w_bsdh = gs * std::min(out.dh, heel) * tan_i;
    const double down = 1.7 * p.surcharge + 1.4 * gc * X5 + 1.4 * gs * p.stem_height;
    out.Mh = std::max((down / 2.0 + 1.4 * w_bs / 3.0 - (q_l + 2.0 * r.q_heel) / 6.0) * heel * heel, 0.0);
    out.Vh = std::max((down + 1.4 * (w_bs + w_bsdh) / 2.0 - 0.9 * (q_dh + r.q_heel) / 2.0) *
                          std::max(heel - out.dh, 0.0),
                      0.0);
    return out;
}

StemKeyDemands stem_key_demands(const PressureState& s, const DesignVector& d,
                                const DesignParameters& p, const SeismicCase& c) {
    StemKeyDemands out;
    const double H = p.stem_height;
    const double cd = std::cos(s.delta);
    const double static_part = 0.5 * s.ka * p.gamma_soil * H * H;
    const double dynamic_part = active_force(s.kae, p.gamma_soil, H, c.kv) - static_part;
    const double surcharge_part = p.surcharge * s.kae * (1.0 - c.kv) * H;
    out.V_stem = 1.7 * (static_part + dynamic_part + surcharge_part) * cd;
    out.M_stem = 1.7 *
                 (static_part * H / 3.0 + dynamic_part * 0.6 * H + surcharge_part * H / 2.0) * cd;

    const double D = p.front_depth;
    const double hk = d.key_height();
    out.V_key = 1.7 * s.Pk;
    out.M_key = 1.7 * s.kp * p.gamma_base * (D * hk * hk / 2.0 + hk * hk * hk / 3.0);
    return out;
}

double straight_development_length(double bar_mm, const DesignParameters& p) {
    return 0.24 * p.fy / std::sqrt(p.fc) * bar_mm / 1000.0;
}

double hooked_development_length(double bar_mm, const DesignParameters& p) {
    return 0.7 * straight_development_length(bar_mm, p);
}

std::array<SectionCheck, 4> section_checks(const SlabDemands& slab, const StemKeyDemands& sk,
                                           const DesignVector& d, const DesignParameters& p) {
    constexpr double b_mm = 1000.0;
    const double beta1 = p.fc <= 28 ? 0.85 : std::max(0.65, 0.85 - 0.05 * (p.fc - 28) / 7.0);
    const double rho_b = 0.85 * beta1 * p.fc / p.fy * 600.0 / (600.0 + p.fy);
    const double rho_min = std::max(1.4 / p.fy, std::sqrt(p.fc) / (4.0 * p.fy));

    const double depths[4] = {d.stem_bottom() - p.cover, slab.dt, slab.dh, d.key_width() - p.cover};
    const double Mu[4] = {sk.M_stem, slab.Mt, slab.Mh, sk.M_key};
    const double Vu[4] = {sk.V_stem, slab.Vt, slab.Vh, sk.V_key};

    std::array<SectionCheck, 4> out{};
    for (std::size_t k = 0; k < 4; ++k) {
        SectionCheck& c = out[k];
        const RebarChoice& bar = lookup(d.r[k]);
        c.section = static_cast<Section>(k);
        c.d = depths[k];
        c.As = bar.area_cm2;
        c.bar_diameter = bar.diameter_mm;
        const double d_mm = c.d * 1000.0;
        const ShearMoment cap = section_capacities(c.As * 100.0, d_mm, b_mm, p.fc, p.fy);
        c.Vn = cap.Vn;
        c.Mn = cap.Mn;
        c.a = cap.a;
        c.capacity_valid = cap.valid;
        c.Mu = Mu[k];
        c.Vu = Vu[k];
        c.As_min = rho_min * b_mm * std::max(d_mm, 0.0) / 100.0;
        c.As_max = 0.75 * rho_b * b_mm * std::max(d_mm, 0.0) / 100.0;
        c.l_db = straight_development_length(bar.diameter_mm, p);
        c.l_dh = hooked_development_length(bar.diameter_mm, p);
        c.l_12db = 12.0 * bar.diameter_mm / 1000.0;
    }
    return out;
}

namespace {

double fs_ratio(double desired, double actual) {
    if (std::isinf(actual)) return -1.0;
    if (!(actual > 0)) return 1.0;
    return desired / actual - 1.0;
}

double usage(double demand, double capacity, bool valid) {
    if (!valid) return 1.0;
    if (!(capacity > 0)) return demand > 0 ? 1.0 : -1.0;
    return demand / capacity - 1.0;
}

// Normalised anchorage check; a non-positive available length always fails.
double fits(double required, double available) {
    if (!(available > 0)) return 1.0;
    return required / available - 1.0;
}

} // namespace

ConstraintVector assemble_constraints(const StabilityReport& r, const std::array<SectionCheck, 4>& sections,
                                      const DesignVector& d, const DesignParameters& p) {
    ConstraintVector cv;
    auto& g = cv.g;
    g[0] = fs_ratio(p.fs_overturning, r.fs_overturning);
    g[1] = fs_ratio(p.fs_sliding, r.fs_sliding);
    g[2] = fs_ratio(p.fs_bearing, r.fs_bearing);
    g[3] = -r.q_min;
    for (std::size_t k = 0; k < 4; ++k) {
        const SectionCheck& s = sections[k];
        g[4 + k] = usage(s.Mu, s.Mn, s.capacity_valid);
        g[8 + k] = usage(s.Vu, s.Vn, s.d > 0);
        g[12 + k] = s.As > 0 ? s.As_min / s.As - 1.0 : 1.0;
        g[16 + k] = s.As_max > 0 ? s.As / s.As_max - 1.0 : 1.0;
    }
    const double X1 = d.base_width();
    g[20] = (d.toe_width() + d.stem_bottom()) / X1 - 1.0;
    g[21] = (d.key_offset() + d.key_width()) / X1 - 1.0;

    const double slab = d.base_thickness() - p.cover;
    const SectionCheck& stem = sections[0];
    const SectionCheck& toe = sections[1];
    const SectionCheck& heel = sections[2];
    const SectionCheck& key = sections[3];
    g[22] = std::min(fits(stem.l_db, slab), fits(stem.l_dh, slab));
    g[23] = std::min(fits(toe.l_db, X1 - d.toe_width() - p.cover), fits(toe.l_12db, slab));
    g[24] = std::min(fits(heel.l_db, d.toe_width() + d.stem_bottom() - p.cover), fits(heel.l_12db, slab));
    g[25] = std::min(fits(key.l_db, slab), fits(key.l_dh, slab));
    return cv;
}

WallAnalysis analyze(const DesignVector& d, const DesignParameters& p, const SeismicCase& c) {
    WallAnalysis a;
    a.pressure = earth_forces(d, p, c);
    a.pressure_valid = a.pressure.has_value();
    if (!a.pressure_valid) {
        a.constraints.g.fill(1.0);
        return a;
    }
    a.stability = factors_of_safety(*a.pressure, d, p);
    a.slab = slab_demands(a.stability, d, p);
    a.stem_key = stem_key_demands(*a.pressure, d, p, c);
    a.sections = section_checks(a.slab, a.stem_key, d, p);
    a.constraints = assemble_constraints(a.stability, a.sections, d, p);
    return a;
}

} // namespace rcwall
