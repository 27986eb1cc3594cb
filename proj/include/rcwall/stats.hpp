#pragma once

#include <optional>
#include <span>
#include <vector>

namespace rcwall {

struct FriedmanResult {
    std::vector<std::vector<double>> ranks;  // [case][algorithm], 1 = lowest mean
    std::vector<double> average;             // per algorithm
    std::vector<double> overall;             // rank of the average ranks
};

/// means[algorithm][case]; every row must have the same length.
/// Throws std::invalid_argument on a ragged or empty matrix.
FriedmanResult friedman_ranks(const std::vector<std::vector<double>>& means);

/// Ascending ranks with ties averaged. Values within `tol` (relative) tie.
std::vector<double> average_ranks(std::span<const double> values, double tol = 1e-9);

struct WilcoxonResult {
    std::vector<double> differences;  // a - b, zeros included
    std::vector<double> ranks;        // rank of |difference|, 0 for dropped zeros
    int n = 0;                        // nonzero pairs
    double t_plus = 0;
    double t_minus = 0;
    double w_stat = 0;
    std::optional<int> w_critical;    // none when n is outside the table
    bool significant = false;
    bool undefined = false;           // every difference was zero
};

/// Two-tailed critical value at alpha = 0.05 for n nonzero pairs (6..25).
std::optional<int> wilcoxon_critical(int n);

/// Paired two-tailed signed-rank test; significant iff W < W_crit.
/// Throws std::invalid_argument when the samples differ in length.
WilcoxonResult wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b);

struct Summary {
    double mean = 0;
    double sd = 0;  // sample standard deviation
    double best = 0;
    double worst = 0;
};

Summary summarize(std::span<const double> values);

} // namespace rcwall
