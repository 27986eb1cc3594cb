#pragma once

#include <cstdint>
#include <vector>

#include "rcwall/limit_states.hpp"
#include "rcwall/problem.hpp"
#include "rcwall/wall_model.hpp"

namespace rcwall {

struct RunRecord {
    std::uint64_t seed = 0;
    std::vector<double> best_penalized;  // one entry per iteration
    std::vector<double> best_raw;
    Position best_position{};
    Evaluation best{};
    ConstraintVector constraints{};
    std::uint64_t evaluations = 0;
    double seconds = 0;  // wall-clock time, set by the batch runner
};

/// Tracks the best-ever solution of a run. Lower penalized value wins.
struct BestTracker {
    Position position{};
    Evaluation eval{};
    bool set = false;

    bool offer(const Position& p, const Evaluation& e) {
        if (set && !(e.penalized < eval.penalized)) return false;
        position = p;
        eval = e;
        set = true;
        return true;
    }
};

} // namespace rcwall
