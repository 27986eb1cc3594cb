#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "rcwall/fuzzy_engine.hpp"
#include "rcwall/problem.hpp"
#include "rcwall/rng.hpp"
#include "rcwall/run_record.hpp"

namespace rcwall {

struct Country {
    Position position{};
    Position velocity{};
    Position best_position{};
    double power = 0;
    double best_power = 0;
    Evaluation eval{};
};

struct Empire {
    std::size_t imperialist = 0;        // index into the population
    std::vector<std::size_t> colonies;  // indices into the population
};

struct FaglsudConfig {
    int iterations = 1000;
    int population = 50;
    int imperialists = 20;
    double alpha = 10.0;
    int window = 10;
    fuzzy::OperatorProbabilities initial{};
    /// Keep operator probabilities constant instead of adapting them.
    bool fixed_operators = false;
};

struct FaglsudState {
    std::vector<Country> countries;
    std::vector<Empire> empires;
    BestTracker global;
    fuzzy::OperatorProbabilities probabilities{};
    int iteration = 0;
};

/// Called after every iteration with the current state.
using FaglsudObserver = std::function<void(const FaglsudState&)>;

std::vector<Country> initialize(const Problem& problem, int population, Rng& rng);

/// Colony counts per empire from normalised powers: floor of each share, the
/// rounding residue going to the strongest. Non-positive totals split evenly.
std::vector<int> allocate_colonies(std::span<const double> normalized_power, int colonies);

std::vector<Empire> form_empires(const std::vector<Country>& countries, int imperialists, Rng& rng);

/// |a - b| / global, clamped to [0, 1].
double normalized_relative_power(double a, double b, double global);

/// 1 - (max - min) / max over the window; an empty window counts as stagnant.
double compute_stagnation(std::span<const double> window_powers);

/// Learning step toward a leader and the agent's own best.
inline double glva_component(double x, double leader, double own_best, double beta, double c, double r1,
                             double r2) {
    return beta * r1 * (leader - x) + c * r2 * (own_best - x);
}

/// Divergence step: keep the current velocity and pull toward an exemplar.
inline double udvd_component(double x, double v, double exemplar, double w, double r) {
    return w * (v + r * (exemplar - x));
}

/// DE mutant component: difference pair, pull to the leader, push from the worst.
inline double edels_component(double a, double b, double leader, double base, double worst, double f_diff,
                              double f_lead, double f_worst) {
    return f_diff * (a - b) + f_lead * (leader - base) + f_worst * (base - worst);
}

struct VelocityLimit {
    Position vmax{};
};

VelocityLimit velocity_limit(const Position& agent, const Position& global_best, int t, double alpha,
                             const Bounds& bounds);

/// Clamp the velocity, move, and reflect components that leave the box.
void move_with_limits(Position& position, Position& velocity, const VelocityLimit& limit,
                      const Bounds& bounds);

RunRecord run_faglsud(const Problem& problem, const FaglsudConfig& config, std::uint64_t seed,
                      const FaglsudObserver& observer = {});

} // namespace rcwall
