#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rcwall {

inline constexpr std::size_t kGeometryVars = 8;
inline constexpr std::size_t kRebarVars = 4;
inline constexpr std::size_t kDesignVars = kGeometryVars + kRebarVars;
inline constexpr int kCatalogSize = 223;

using Position = std::array<double, kDesignVars>;

/// Wall geometry (m) plus the four rebar catalog indices.
///
/// Geometry indices: 0 base width, 1 toe width, 2 stem bottom thickness,
/// 3 stem top thickness, 4 base slab thickness, 5 key offset from the toe,
/// 6 key width, 7 key height. Rebar: stem, toe, heel, key.
struct DesignVector {
    std::array<double, kGeometryVars> x{};
    std::array<int, kRebarVars> r{1, 1, 1, 1};

    double base_width() const { return x[0]; }
    double toe_width() const { return x[1]; }
    double stem_bottom() const { return x[2]; }
    double stem_top() const { return x[3]; }
    double base_thickness() const { return x[4]; }
    double key_offset() const { return x[5]; }
    double key_width() const { return x[6]; }
    double key_height() const { return x[7]; }
    double heel_length() const { return x[0] - x[1] - x[2]; }

    /// Rounds the rebar components of a continuous position to the
    /// nearest catalog index in [1, 223].
    static DesignVector from_position(const Position& p);
    Position to_position() const;
};

struct Bounds {
    Position lower{};
    Position upper{};

    Position clamp(const Position& p) const;
    bool contains(const Position& p) const;
};

enum class Example { One = 1, Two = 2 };

Bounds bounds_for(Example ex);

struct DesignParameters {
    double stem_height = 0;       // H, m
    double fy = 0;                // MPa
    double fc = 0;                // MPa
    double cover = 0;             // CC, m
    double rho_st = 0;            // shrinkage/temperature steel ratio
    double surcharge = 0;         // q, kPa
    double backfill_slope = 0;    // i, deg
    double phi = 0;               // retained soil friction, deg
    double phi_base = 0;          // base soil friction, deg
    double gamma_soil = 0;        // retained soil, kN/m3
    double gamma_base = 0;        // base soil, kN/m3
    double gamma_concrete = 0;    // kN/m3
    double cohesion_base = 0;     // kPa
    double front_depth = 0;       // D, m
    double steel_cost = 0;        // $/kg
    double concrete_cost = 0;     // $/m3
    double fs_overturning = 0;
    double fs_sliding = 0;
    double fs_bearing = 0;
    double steel_emission = 0;    // kg CO2 / kg
    double concrete_emission = 0; // kg CO2 / m3

    /// Wall friction angle, taken as two thirds of the retained soil angle.
    double wall_friction() const { return 2.0 * phi / 3.0; }

    /// Throws std::invalid_argument naming the first bad field.
    void validate() const;
};

DesignParameters preset_parameters(Example ex);

/// Loads parameters from a JSON object keyed by symbol names
/// (H, fy, fc, CC, rho_st, q, i, phi, phi_base, gamma_s, gamma_base,
/// gamma_c, c_base, D, C_s, C_c, FS_O, FS_S, FS_B, e_s, e_c). Missing keys
/// keep the values of `base`.
DesignParameters parameters_from_json(std::string_view json_text, const DesignParameters& base);

struct SeismicCase {
    double kh = 0;
    double kv = 0;
};

/// The nine (kh, kv) combinations, case 1 first.
const std::array<SeismicCase, 9>& seismic_cases();
SeismicCase seismic_case(int case_number);

struct RebarChoice {
    int count = 0;
    int diameter_mm = 0;
    double area_cm2 = 0;
};

/// All bar layouts sorted by area, duplicates removed.
std::vector<RebarChoice> build_catalog();

/// Catalog entry by 1-based index. Throws std::out_of_range.
const RebarChoice& lookup(int index);

std::span<const RebarChoice> catalog();

} // namespace rcwall
