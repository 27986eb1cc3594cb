#include "rcwall/wall_model.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

namespace rcwall {

DesignVector DesignVector::from_position(const Position& p) {
    DesignVector d;
    for (std::size_t i = 0; i < kGeometryVars; ++i) d.x[i] = p[i];
    for (std::size_t i = 0; i < kRebarVars; ++i) {
        const double v = std::round(p[kGeometryVars + i]);
        d.r[i] = static_cast<int>(std::clamp(v, 1.0, static_cast<double>(kCatalogSize)));
    }
    return d;
}

Position DesignVector::to_position() const {
    Position p{};
    for (std::size_t i = 0; i < kGeometryVars; ++i) p[i] = x[i];
    for (std::size_t i = 0; i < kRebarVars; ++i) p[kGeometryVars + i] = r[i];
    return p;
}

Position Bounds::clamp(const Position& p) const {
    Position out{};
    for (std::size_t i = 0; i < kDesignVars; ++i) out[i] = std::clamp(p[i], lower[i], upper[i]);
    return out;
}

bool Bounds::contains(const Position& p) const {
    for (std::size_t i = 0; i < kDesignVars; ++i)
        if (p[i] < lower[i] || p[i] > upper[i]) return false;
    return true;
}

Bounds bounds_for(Example ex) {
    const double n = kCatalogSize;
    if (ex == Example::One)
        return {{1.31, 0.44, 0.20, 0.20, 0.27, 1.31, 0.20, 0.20, 1, 1, 1, 1},
                {3.50, 0.78, 0.33, 0.33, 0.33, 3.50, 0.33, 0.33, n, n, n, n}};
    return {{2.60, 0.87, 0.30, 0.30, 0.54, 2.60, 0.30, 0.30, 1, 1, 1, 1},
            {5.50, 1.56, 0.67, 0.67, 0.67, 5.50, 0.67, 0.67, n, n, n, n}};
}

void DesignParameters::validate() const {
    const std::pair<const char*, double> positive[] = {
        {"H", stem_height},        {"fy", fy},
        {"fc", fc},                {"CC", cover},
        {"rho_st", rho_st},        {"q", surcharge},
        {"phi", phi},              {"phi_base", phi_base},
        {"gamma_s", gamma_soil},   {"gamma_base", gamma_base},
        {"gamma_c", gamma_concrete}, {"c_base", cohesion_base},
        {"D", front_depth},        {"C_s", steel_cost},
        {"C_c", concrete_cost},    {"FS_O", fs_overturning},
        {"FS_S", fs_sliding},      {"FS_B", fs_bearing},
        {"e_s", steel_emission},   {"e_c", concrete_emission},
    };
    for (const auto& [name, v] : positive)
        if (!(v > 0)) throw std::invalid_argument(std::string("parameter ") + name + " must be positive");
    if (!(backfill_slope >= 0)) throw std::invalid_argument("parameter i must be non-negative");
    if (phi >= 90 || phi_base >= 90) throw std::invalid_argument("friction angles must be below 90 deg");
}

DesignParameters preset_parameters(Example ex) {
    DesignParameters p;
    p.fy = 400;
    p.fc = 21;
    p.cover = 0.07;
    p.rho_st = 0.002;
    p.gamma_concrete = 23.5;
    p.steel_cost = 0.4;
    p.concrete_cost = 40;
    p.fs_overturning = 1.5;
    p.fs_sliding = 1.5;
    p.fs_bearing = 3.0;
    p.steel_emission = 2.82;
    p.concrete_emission = 224.94;
    if (ex == Example::One) {
        p.stem_height = 3;
        p.surcharge = 20;
        p.backfill_slope = 10;
        p.phi = 36;
        p.phi_base = 36;
        p.gamma_soil = 17.5;
        p.gamma_base = 18.5;
        p.cohesion_base = 125;
        p.front_depth = 0.5;
    } else {
        p.stem_height = 6;
        p.surcharge = 30;
        p.backfill_slope = 0;
        p.phi = 32;
        p.phi_base = 32;
        p.gamma_soil = 20;
        p.gamma_base = 18;
        p.cohesion_base = 100;
        p.front_depth = 1;
    }
    return p;
}

DesignParameters parameters_from_json(std::string_view json_text, const DesignParameters& base) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("parameter file: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("parameter file: expected a JSON object");

    DesignParameters p = base;
    const std::map<std::string, double DesignParameters::*> fields = {
        {"H", &DesignParameters::stem_height},
        {"fy", &DesignParameters::fy},
        {"fc", &DesignParameters::fc},
        {"CC", &DesignParameters::cover},
        {"rho_st", &DesignParameters::rho_st},
        {"q", &DesignParameters::surcharge},
        {"i", &DesignParameters::backfill_slope},
        {"phi", &DesignParameters::phi},
        {"phi_base", &DesignParameters::phi_base},
        {"gamma_s", &DesignParameters::gamma_soil},
        {"gamma_base", &DesignParameters::gamma_base},
        {"gamma_c", &DesignParameters::gamma_concrete},
        {"c_base", &DesignParameters::cohesion_base},
        {"D", &DesignParameters::front_depth},
        {"C_s", &DesignParameters::steel_cost},
        {"C_c", &DesignParameters::concrete_cost},
        {"FS_O", &DesignParameters::fs_overturning},
        {"FS_S", &DesignParameters::fs_sliding},
        {"FS_B", &DesignParameters::fs_bearing},
        {"e_s", &DesignParameters::steel_emission},
        {"e_c", &DesignParameters::concrete_emission},
    };
    for (const auto& [key, value] : j.items()) {
        auto it = fields.find(key);
        if (it == fields.end()) throw std::invalid_argument("parameter file: unknown key '" + key + "'");
        if (!value.is_number()) throw std::invalid_argument("parameter file: '" + key + "' must be a number");
        p.*(it->second) = value.get<double>();
    }
    p.validate();
    return p;
}

const std::array<SeismicCase, 9>& seismic_cases() {
    static const std::array<SeismicCase, 9> cases = {{
        {0.00, 0.00}, {0.15, 0.00}, {0.30, 0.00},
        {0.00, 0.15}, {0.15, 0.15}, {0.30, 0.15},
        {0.00, 0.30}, {0.15, 0.30}, {0.30, 0.30},
    }};
    return cases;
}

SeismicCase seismic_case(int case_number) {
    if (case_number < 1 || case_number > 9)
        throw std::out_of_range("seismic case must be in 1..9, got " + std::to_string(case_number));
    return seismic_cases()[static_cast<std::size_t>(case_number - 1)];
}

namespace {

// Bar counts 3..18 over these diameters give 223 distinct areas and reproduce
// the first five and last three catalog rows.
constexpr int kDiameters[] = {10, 12, 14, 15, 16, 17, 18, 19, 20, 22, 24, 25, 26, 28, 30};
constexpr int kMinBars = 3;
constexpr int kMaxBars = 18;

} // namespace

std::vector<RebarChoice> build_catalog() {
    // Keyed on n*d^2 so equal areas collapse exactly; the finer bar wins.
    std::map<long, RebarChoice> by_area;
    for (int d : kDiameters) {
        for (int n = kMinBars; n <= kMaxBars; ++n) {
            const long key = static_cast<long>(n) * d * d;
            const double area = n * std::numbers::pi * (d / 10.0) * (d / 10.0) / 4.0;
            auto [it, inserted] = by_area.try_emplace(key, RebarChoice{n, d, area});
            if (!inserted && d < it->second.diameter_mm) it->second = RebarChoice{n, d, area};
        }
    }
    std::vector<RebarChoice> out;
    out.reserve(by_area.size());
    for (const auto& [key, choice] : by_area) out.push_back(choice);
    if (out.size() != static_cast<std::size_t>(kCatalogSize))
        throw std::logic_error("rebar catalog generation produced " + std::to_string(out.size()) +
                               " entries, expected 223");
    return out;
}

std::span<const RebarChoice> catalog() {
    static const std::vector<RebarChoice> table = build_catalog();
    return table;
}

const RebarChoice& lookup(int index) {
    if (index < 1 || index > kCatalogSize)
        throw std::out_of_range("rebar index must be in 1..223, got " + std::to_string(index));
    return catalog()[static_cast<std::size_t>(index - 1)];
}

} // namespace rcwall
