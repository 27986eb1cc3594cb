#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rcwall/batch.hpp"
#include "rcwall/objective.hpp"
#include "rcwall/stats.hpp"
#include "rcwall/wall_model.hpp"

namespace rcwall {

struct ExperimentConfig {
    Example example = Example::One;
    std::vector<int> cases{1};
    ObjectiveKind objective = ObjectiveKind::Cost;
    Algorithm algorithm = Algorithm::Faglsud;
    int runs = 101;
    int population = 50;
    int iterations = 1000;
    std::uint64_t seed = 42;
    std::filesystem::path out = "results";
    bool parallel = true;
    /// Replaces the example preset when set.
    std::optional<DesignParameters> parameters;

    /// Throws std::invalid_argument on the first bad field.
    void validate() const;
};

/// "ci" (11 runs x 300 iterations) or "full" (101 x 1000).
void apply_profile(ExperimentConfig& config, std::string_view profile);

/// Overrides fields from a JSON object. Keys: example, cases (int or list),
/// objective, algo, runs, iters, pop, seed, out, profile, parallel and
/// parameters (object, see parameters_from_json). A profile is applied
/// before the explicit runs/iters keys.
void apply_json(ExperimentConfig& config, std::string_view json_text);

Problem make_problem(const ExperimentConfig& config, int seismic_case);

struct CaseResult {
    int seismic_case = 1;
    std::vector<RunRecord> runs;
    Summary summary;  // over the final best penalized value of each run
};

struct ExperimentResult {
    std::vector<CaseResult> cases;
};

/// Runs every case without touching the filesystem.
ExperimentResult run_batches(const ExperimentConfig& config);

/// Writes convergence.csv, designs.csv and summary.csv into `dir`.
void write_results(const std::filesystem::path& dir, const ExperimentResult& result);

/// run_batches followed by write_results into config.out.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Shortest text that parses back to the same double.
std::string format_number(double v);

struct AlgorithmSummary {
    std::string name;
    std::map<int, double> means;  // case -> mean
};

/// Reads a summary.csv; throws std::runtime_error on a missing or bad file.
AlgorithmSummary read_summary(const std::filesystem::path& path, std::string name);

/// Friedman ranks over all summaries, then a Wilcoxon table of the first
/// summary against each other one. Throws std::invalid_argument when the
/// case sets differ or fewer than two summaries are given.
void stats_report(std::span<const AlgorithmSummary> summaries, std::ostream& os);

/// Twelve numbers separated by whitespace or commas.
Position parse_design(std::string_view text);

/// Prints g1..g26, the safety factors, base pressures and the three
/// objective values. Bound violations are listed but the design is still
/// evaluated.
void check_report(const Position& design, Example example, int seismic_case, std::ostream& os,
                  const std::optional<DesignParameters>& parameters = std::nullopt);

void catalog_report(std::ostream& os);

} // namespace rcwall
