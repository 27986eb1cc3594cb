#pragma once

#include "rcwall/limit_states.hpp"
#include "rcwall/objective.hpp"
#include "rcwall/wall_model.hpp"

namespace rcwall {

struct Evaluation {
    double penalized = 0;
    double power = 0;
    double raw = 0;
    bool feasible = false;
};

/// One optimisation target: a wall example under one seismic case and one
/// objective. Shared by every optimiser so they see the same fitness.
struct Problem {
    DesignParameters params;
    SeismicCase seismic;
    ObjectiveKind kind = ObjectiveKind::Cost;
    Bounds bounds;
    double lambda = kDefaultPenalty;

    static Problem make(Example ex, int case_number, ObjectiveKind kind);

    Evaluation evaluate(const Position& p) const;
    WallAnalysis analysis(const Position& p) const;
};

} // namespace rcwall
