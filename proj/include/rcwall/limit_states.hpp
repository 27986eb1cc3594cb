#pragma once

#include <array>
#include <limits>
#include <optional>

#include "rcwall/earth_pressure.hpp"
#include "rcwall/wall_model.hpp"

namespace rcwall {

inline constexpr std::size_t kConstraintCount = 26;
inline constexpr double kInfiniteSafety = std::numeric_limits<double>::infinity();

struct StabilityReport {
    double fs_overturning = 0;
    double fs_sliding = 0;
    double fs_bearing = 0;
    double moment_resisting = 0;   // about the toe, kN.m/m
    double moment_overturning = 0;
    double force_resisting = 0;    // horizontal, kN/m
    double force_driving = 0;
    double vertical = 0;           // sum of vertical forces, kN/m
    double eccentricity = 0;       // m, positive toward the toe
    double q_toe = 0, q_heel = 0;  // base pressure at each end, kPa
    double q_max = 0, q_min = 0;
    double q_ultimate = 0;         // kPa
};

enum class Section { Stem = 0, Toe = 1, Heel = 2, Key = 3 };

struct SectionCheck {
    Section section = Section::Stem;
    double Vn = 0, Vu = 0;         // kN/m
    double Mn = 0, Mu = 0;         // kN.m/m
    double As = 0, As_min = 0, As_max = 0;   // cm2/m
    double l_db = 0, l_dh = 0, l_12db = 0;   // m
    double d = 0;                  // effective depth, m
    double a = 0;                  // stress block depth, mm
    double bar_diameter = 0;       // mm
    bool capacity_valid = true;    // false when a >= d
};

/// g[j] <= 0 means constraint j+1 is satisfied.
struct ConstraintVector {
    std::array<double, kConstraintCount> g{};

    bool feasible(double slack = 0.0) const;
    double max_violation() const;
};

struct BasePressures {
    double e = 0;
    double q_max = 0;
    double q_min = 0;
};

BasePressures base_pressures(double sum_v, double width, double m_resisting, double m_overturning);

struct ShearMoment {
    double Vn = 0;
    double Mn = 0;
    double a = 0;          // mm
    bool valid = true;
};

/// Factored strengths of a 1 m strip: d and b in mm, As in mm2, stresses MPa.
/// Returns kN and kN.m.
ShearMoment section_capacities(double As_mm2, double d_mm, double b_mm, double fc, double fy);

/// Meyerhof ultimate bearing capacity with depth factors, kPa.
double bearing_capacity(const DesignParameters& p, const DesignVector& d);

/// Bearing-capacity factors (Nc, Nq, Ngamma) for a friction angle in degrees.
struct BearingFactors {
    double Nc = 0, Nq = 0, Ngamma = 0;
};
BearingFactors bearing_factors(double phi_deg);

StabilityReport factors_of_safety(const PressureState& s, const DesignVector& d,
                                  const DesignParameters& p);

struct SlabDemands {
    double Mt = 0, Vt = 0;   // toe
    double Mh = 0, Vh = 0;   // heel
    double dt = 0, dh = 0;   // effective depths, m
};

SlabDemands slab_demands(const StabilityReport& r, const DesignVector& d, const DesignParameters& p);

struct StemKeyDemands {
    double M_stem = 0, V_stem = 0;
    double M_key = 0, V_key = 0;
};

StemKeyDemands stem_key_demands(const PressureState& s, const DesignVector& d,
                                const DesignParameters& p, const SeismicCase& c);

/// ACI straight development length (m) for a bar diameter in mm.
double straight_development_length(double bar_mm, const DesignParameters& p);
/// Hooked-bar development length (m).
double hooked_development_length(double bar_mm, const DesignParameters& p);

std::array<SectionCheck, 4> section_checks(const SlabDemands& slab, const StemKeyDemands& sk,
                                           const DesignVector& d, const DesignParameters& p);

ConstraintVector assemble_constraints(const StabilityReport& r, const std::array<SectionCheck, 4>& sections,
                                      const DesignVector& d, const DesignParameters& p);

/// Everything the limit-state pipeline computes for one design.
struct WallAnalysis {
    std::optional<PressureState> pressure;
    StabilityReport stability;
    SlabDemands slab;
    StemKeyDemands stem_key;
    std::array<SectionCheck, 4> sections{};
    ConstraintVector constraints;
    bool pressure_valid = false;
};

/// Runs the full analysis. A missing active/passive wedge yields every
/// stability constraint at +1.
WallAnalysis analyze(const DesignVector& d, const DesignParameters& p, const SeismicCase& c);

} // namespace rcwall
