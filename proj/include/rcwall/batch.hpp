#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rcwall/problem.hpp"
#include "rcwall/run_record.hpp"

namespace rcwall {

enum class Algorithm { Faglsud, Pso, De };

/// "faglsud", "pso" or "de". Throws std::invalid_argument.
Algorithm parse_algorithm(std::string_view name);
std::string to_string(Algorithm a);

struct BatchConfig {
    Algorithm algorithm = Algorithm::Faglsud;
    int runs = 101;
    int iterations = 1000;
    int population = 50;
    std::uint64_t root_seed = 42;
};

/// Seed of run `run_index`; depends only on the root seed and the index.
std::uint64_t run_seed(const BatchConfig& config, int run_index);

RunRecord run_single(const Problem& problem, const BatchConfig& config, int run_index);

/// Reference implementation, one run after another.
std::vector<RunRecord> run_batch_serial(const Problem& problem, const BatchConfig& config);

/// Runs spread over OpenMP threads. Results equal run_batch_serial exactly.
std::vector<RunRecord> run_batch_parallel(const Problem& problem, const BatchConfig& config);

/// Threads run_batch_parallel will use (1 without OpenMP).
int batch_threads();

} // namespace rcwall
