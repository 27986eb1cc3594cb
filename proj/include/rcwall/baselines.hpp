#pragma once

#include <cstdint>

#include "rcwall/problem.hpp"
#include "rcwall/run_record.hpp"

namespace rcwall {

struct PsoConfig {
    int iterations = 1000;
    int population = 50;
    double inertia = 1.0;
    double damping = 0.99;
    double c1 = 1.5;
    double c2 = 2.0;
    double velocity_fraction = 0.1;  // of each variable's range
};

struct DeConfig {
    int iterations = 1000;
    int population = 50;
    double F = 0.2;
    double crossover = 0.01;
};

/// Global-best PSO; velocities are mirrored when a particle leaves the box.
RunRecord run_pso(const Problem& problem, const PsoConfig& config, std::uint64_t seed);

/// DE/rand/1/bin with one forced crossover dimension per trial.
RunRecord run_de(const Problem& problem, const DeConfig& config, std::uint64_t seed);

} // namespace rcwall
