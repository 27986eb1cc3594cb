#pragma once

#include <string>
#include <string_view>

#include "rcwall/limit_states.hpp"
#include "rcwall/wall_model.hpp"

namespace rcwall {

enum class ObjectiveKind { Cost, Weight, Co2 };

ObjectiveKind parse_objective(std::string_view name);
std::string to_string(ObjectiveKind kind);

inline constexpr double kSteelDensity = 7850.0;   // kg/m3
inline constexpr double kDefaultPenalty = 1.0e15;

struct ObjectiveBreakdown {
    double steel_weight = 0;     // kg/m
    double concrete_volume = 0;  // m3/m
    double value = 0;
    ObjectiveKind kind = ObjectiveKind::Cost;
};

double concrete_volume(const DesignVector& d, const DesignParameters& p);
double steel_weight(const DesignVector& d, const DesignParameters& p);

double objective_value(double steel_kg, double concrete_m3, const DesignParameters& p, ObjectiveKind kind);

ObjectiveBreakdown evaluate_objective(const DesignVector& d, const DesignParameters& p, ObjectiveKind kind);

struct PenalizedFitness {
    double penalized = 0;
    double power = 0;
    double lambda = kDefaultPenalty;
};

/// raw + lambda * sum of squared positive constraint values; power is the
/// reciprocal. Throws std::invalid_argument unless raw > 0.
PenalizedFitness penalize(double raw, const ConstraintVector& g, double lambda = kDefaultPenalty);

} // namespace rcwall
