#include "rcwall/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rcwall {

namespace {

bool nearly_equal(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

} // namespace

std::vector<double> average_ranks(std::span<const double> values, double tol) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1;
        while (j < n && nearly_equal(values[order[j]], values[order[i]], tol)) ++j;
        const double r = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (std::size_t k = i; k < j; ++k) ranks[order[k]] = r;
        i = j;
    }
    return ranks;
}

FriedmanResult friedman_ranks(const std::vector<std::vector<double>>& means) {
    if (means.empty() || means.front().empty()) throw std::invalid_argument("friedman_ranks: empty matrix");
    const std::size_t algs = means.size();
    const std::size_t cases = means.front().size();
    for (const auto& row : means)
        if (row.size() != cases) throw std::invalid_argument("friedman_ranks: ragged matrix");

    FriedmanResult out;
    out.average.assign(algs, 0.0);
    std::vector<double> column(algs);
    for (std::size_t c = 0; c < cases; ++c) {
        for (std::size_t a = 0; a < algs; ++a) column[a] = means[a][c];
        out.ranks.push_back(average_ranks(column));
        for (std::size_t a = 0; a < algs; ++a) out.average[a] += out.ranks.back()[a] / static_cast<double>(cases);
    }
    out.overall = average_ranks(out.average);
    return out;
}

std::optional<int> wilcoxon_critical(int n) {
    static constexpr int table[] = {0, 2, 3, 5, 8, 10, 13, 17, 21, 25, 29, 34, 40, 46, 52, 58, 65, 73, 81, 89};
    if (n < 6 || n > 25) return std::nullopt;
    return table[n - 6];
}

WilcoxonResult wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw std::invalid_argument("wilcoxon_signed_rank: samples differ in length");
    WilcoxonResult r;
    r.differences.resize(a.size());
    r.ranks.assign(a.size(), 0.0);
    std::vector<std::size_t> kept;
    std::vector<double> magnitude;
    for (std::size_t i = 0; i < a.size(); ++i) {
        r.differences[i] = a[i] - b[i];
        if (nearly_equal(a[i], b[i], 1e-9)) continue;
        kept.push_back(i);
        magnitude.push_back(std::abs(r.differences[i]));
    }
    r.n = static_cast<int>(kept.size());
    if (kept.empty()) {
        r.undefined = true;
        return r;
    }
    const std::vector<double> ranks = average_ranks(magnitude);
    for (std::size_t k = 0; k < kept.size(); ++k) {
        r.ranks[kept[k]] = ranks[k];
        (r.differences[kept[k]] > 0 ? r.t_plus : r.t_minus) += ranks[k];
    }
    r.w_stat = std::min(r.t_plus, r.t_minus);
    r.w_critical = wilcoxon_critical(r.n);
    r.significant = r.w_critical && r.w_stat < *r.w_critical;
    return r;
}

Summary summarize(std::span<const double> v) {
    if (v.empty()) throw std::invalid_argument("summarize: no values");
    Summary s;
    s.mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
    double ss = 0;
    for (double x : v) ss += (x - s.mean) * (x - s.mean);
    s.sd = v.size() > 1 ? std::sqrt(ss / static_cast<double>(v.size() - 1)) : 0.0;
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    s.best = *lo;
    s.worst = *hi;
    return s;
}

} // namespace rcwall
