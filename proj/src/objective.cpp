#include "rcwall/objective.hpp"

#include <algorithm>
#include <stdexcept>

namespace rcwall {

ObjectiveKind parse_objective(std::string_view name) {
    if (name == "cost") return ObjectiveKind::Cost;
    if (name == "weight") return ObjectiveKind::Weight;
    if (name == "co2") return ObjectiveKind::Co2;
    throw std::invalid_argument("unknown objective '" + std::string(name) + "' (cost|weight|co2)");
}

std::string to_string(ObjectiveKind kind) {
    switch (kind) {
    case ObjectiveKind::Cost: return "cost";
    case ObjectiveKind::Weight: return "weight";
    case ObjectiveKind::Co2: return "co2";
    }
    return "cost";
}

double concrete_volume(const DesignVector& d, const DesignParameters& p) {
    const double stem = 0.5 * (d.stem_bottom() + d.stem_top()) * p.stem_height;
    const double base = d.base_width() * d.base_thickness();
    const double key = d.key_width() * d.key_height();
    return stem + base + key;
}

double steel_weight(const DesignVector& d, const DesignParameters& p) {
    const double cc2 = 2.0 * p.cover;
    const double lengths[4] = {
        p.stem_height + d.base_thickness() - cc2,
        d.toe_width() - cc2,
        d.heel_length() - cc2,
        d.key_height() + d.base_thickness() - cc2,
    };
    double volume = 0;
    for (std::size_t k = 0; k < 4; ++k)
        volume += lookup(d.r[k]).area_cm2 * 1e-4 * std::max(lengths[k], 0.0);
    // Distribution steel running along the wall in every member.
    volume += p.rho_st * concrete_volume(d, p);
    return volume * kSteelDensity;
}

double objective_value(double steel_kg, double concrete_m3, const DesignParameters& p, ObjectiveKind kind) {
    switch (kind) {
    case ObjectiveKind::Cost: return p.steel_cost * steel_kg + p.concrete_cost * concrete_m3;
    case ObjectiveKind::Weight: return steel_kg + 100.0 * p.gamma_concrete * concrete_m3;
    case ObjectiveKind::Co2: return p.steel_emission * steel_kg + p.concrete_emission * concrete_m3;
    }
    return 0;
}

ObjectiveBreakdown evaluate_objective(const DesignVector& d, const DesignParameters& p, ObjectiveKind kind) {
    ObjectiveBreakdown b;
    b.kind = kind;
    b.steel_weight = steel_weight(d, p);
    b.concrete_volume = concrete_volume(d, p);
    b.value = objective_value(b.steel_weight, b.concrete_volume, p, kind);
    return b;
}

PenalizedFitness penalize(double raw, const ConstraintVector& g, double lambda) {
    if (!(raw > 0)) throw std::invalid_argument("penalize: raw objective must be positive");
    double sum = 0;
    for (double v : g.g)
        if (v > 0) sum += v * v;
    PenalizedFitness f;
    f.lambda = lambda;
    f.penalized = raw + lambda * sum;
    f.power = 1.0 / f.penalized;
    return f;
}

} // namespace rcwall
