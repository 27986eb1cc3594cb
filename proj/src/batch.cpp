#include "rcwall/batch.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rcwall/baselines.hpp"
#include "rcwall/faglsud.hpp"
#include "rcwall/rng.hpp"

namespace rcwall {

Algorithm parse_algorithm(std::string_view name) {
    if (name == "faglsud") return Algorithm::Faglsud;
    if (name == "pso") return Algorithm::Pso;
    if (name == "de") return Algorithm::De;
    throw std::invalid_argument("unknown algorithm '" + std::string(name) + "' (expected faglsud|pso|de)");
}

std::string to_string(Algorithm a) {
    switch (a) {
    case Algorithm::Faglsud: return "faglsud";
    case Algorithm::Pso: return "pso";
    case Algorithm::De: return "de";
    }
    return "?";
}

std::uint64_t run_seed(const BatchConfig& config, int run_index) {
    return stream_seed(config.root_seed, static_cast<std::uint64_t>(run_index));
}

namespace {

RunRecord dispatch(const Problem& problem, const BatchConfig& config, std::uint64_t seed) {
    switch (config.algorithm) {
    case Algorithm::Faglsud: {
        FaglsudConfig c;
        c.iterations = config.iterations;
        c.population = config.population;
        // Small populations keep at least one colony.
        c.imperialists = std::min(c.imperialists, config.population - 1);
        return run_faglsud(problem, c, seed);
    }
    case Algorithm::Pso: {
        PsoConfig c;
        c.iterations = config.iterations;
        c.population = config.population;
        return run_pso(problem, c, seed);
    }
    case Algorithm::De: {
        DeConfig c;
        c.iterations = config.iterations;
        c.population = config.population;
        return run_de(problem, c, seed);
    }
    }
    throw std::invalid_argument("bad algorithm");
}

} // namespace

RunRecord run_single(const Problem& problem, const BatchConfig& config, int run_index) {
    const auto start = std::chrono::steady_clock::now();
    RunRecord rec = dispatch(problem, config, run_seed(config, run_index));
    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

namespace {

int min_population(Algorithm a) {
    switch (a) {
    case Algorithm::Faglsud: return 2;
    case Algorithm::Pso: return 1;
    case Algorithm::De: return 4;
    }
    return 1;
}

// Exceptions must not escape an OpenMP region, so everything the optimisers
// would reject is rejected here first.
void check(const BatchConfig& config) {
    if (config.runs < 1) throw std::invalid_argument("runs must be at least 1");
    if (config.iterations < 1) throw std::invalid_argument("iterations must be at least 1");
    if (config.population < min_population(config.algorithm))
        throw std::invalid_argument("population must be at least " +
                                    std::to_string(min_population(config.algorithm)) + " for " +
                                    to_string(config.algorithm));
}

} // namespace

std::vector<RunRecord> run_batch_serial(const Problem& problem, const BatchConfig& config) {
    check(config);
    std::vector<RunRecord> out;
    out.reserve(static_cast<std::size_t>(config.runs));
    for (int r = 0; r < config.runs; ++r) out.push_back(run_single(problem, config, r));
    return out;
}

std::vector<RunRecord> run_batch_parallel(const Problem& problem, const BatchConfig& config) {
    check(config);
    std::vector<RunRecord> out(static_cast<std::size_t>(config.runs));
#pragma omp parallel for schedule(dynamic, 1)
    for (int r = 0; r < config.runs; ++r) out[static_cast<std::size_t>(r)] = run_single(problem, config, r);
    return out;
}

int batch_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace rcwall
