#pragma once

#include <optional>

#include "rcwall/wall_model.hpp"

namespace rcwall {

/// Mononobe-Okabe pressure coefficients and resultants for one wall and one
/// seismic case. Forces are per metre of wall (kN/m), heights in m.
struct PressureState {
    double theta = 0;      // seismic inertia angle, rad
    double delta = 0;      // wall friction angle used on the active side, rad
    double ka = 0, kae = 0;
    double kp = 0, kpe = 0;
    double Pa = 0, Pae = 0, dPae = 0;
    double Pp = 0, Ppe = 0, dPpe = 0;
    double Pk = 0;
    double Pq = 0;         // surcharge thrust, acts at h/2
    double hbar = 0;       // acting height of Pae above the base underside
    double h = 0;          // active pressure height

    /// Passive resistance in front of the toe after the seismic reduction.
    double passive_toe() const { return Pp - dPpe; }
    /// Total inclined active thrust including surcharge.
    double total_thrust() const { return Pae + Pq; }
};

struct ActiveCoefficients {
    double ka = 0;
    double kae = 0;
};

struct PassiveCoefficients {
    double kp = 0;
    double kpe = 0;
};

/// atan(kh / (1 - kv)). Throws std::domain_error for kv >= 1.
double seismic_inertia_angle(const SeismicCase& c);

/// Dynamic active coefficient and its static (theta = 0) counterpart. All
/// angles in radians. Empty when no sliding wedge exists (phi < theta + i).
std::optional<ActiveCoefficients> active_coefficients(double phi, double delta, double beta,
                                                      double slope, double theta);

/// Dynamic passive coefficient and its static counterpart, level ground.
std::optional<PassiveCoefficients> passive_coefficients(double phi, double delta, double beta,
                                                        double theta);

/// 1/2 k gamma h^2 (1 - kv).
double active_force(double kae, double gamma, double h, double kv);

/// Acting height of the combined static + dynamic thrust: the static part at
/// h/3 and the dynamic increment at 0.6h.
double acting_height(double Pa, double dPae, double h);

/// Height from the base underside to the backfill surface at the heel end.
double active_pressure_height(const DesignVector& d, const DesignParameters& p);

/// Pressure resultants on the wall's virtual back, the toe front and the key.
/// Empty when the active or passive wedge does not exist.
std::optional<PressureState> earth_forces(const DesignVector& d, const DesignParameters& p,
                                          const SeismicCase& c);

inline constexpr double deg2rad(double deg) { return deg * 0.017453292519943295; }

} // namespace rcwall
