#include "rcwall/fuzzy_engine.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rcwall::fuzzy {

double Membership::of(Term t) const {
    switch (t) {
    case Term::Low: return low;
    case Term::Medium: return medium;
    case Term::High: return high;
    case Term::Any: return 1.0;
    case Term::LowOrMedium: return std::max(low, medium);
    }
    return 0.0;
}

Membership fuzzify(double x) {
    x = std::clamp(x, 0.0, 1.0);
    Membership m;
    if (x <= 0.5) {
        m.low = 1.0 - 2.0 * x;
        m.medium = 2.0 * x;
    } else {
        m.medium = 2.0 - 2.0 * x;
        m.high = 2.0 * x - 1.0;
    }
    return m;
}

namespace {

Term parse_term(const std::string& tok, const std::string& row) {
    if (tok == "L") return Term::Low;
    if (tok == "M") return Term::Medium;
    if (tok == "H") return Term::High;
    if (tok == "Any") return Term::Any;
    if (tok == "L/M") return Term::LowOrMedium;
    throw std::invalid_argument("bad fuzzy term '" + tok + "' in row: " + row);
}

double term_shape(Term t, double u) {
    switch (t) {
    case Term::Low: return std::max(0.0, 1.0 - 2.0 * u);
    case Term::Medium: return std::max(0.0, 1.0 - std::abs(2.0 * u - 1.0));
    case Term::High: return std::max(0.0, 2.0 * u - 1.0);
    default: return 0.0;
    }
}

} // namespace

RuleTable::RuleTable(std::string name, std::vector<std::string> inputs, std::vector<OutputRange> outputs,
                     std::span<const std::string_view> rows)
    : name_(std::move(name)), inputs_(std::move(inputs)), outputs_(std::move(outputs)) {
    if (inputs_.size() > kMaxInputs || outputs_.size() > kMaxOutputs)
        throw std::invalid_argument("rule table too wide: " + name_);
    for (std::string_view sv : rows) {
        const std::string row(sv);
        std::istringstream in(row);
        Rule r;
        std::size_t ni = 0, no = 0;
        bool after_bar = false;
        std::string tok;
        while (in >> tok) {
            if (tok == "|") {
                after_bar = true;
                continue;
            }
            const Term t = parse_term(tok, row);
            if (!after_bar) {
                if (ni >= inputs_.size()) throw std::invalid_argument("too many antecedents: " + row);
                r.antecedent[ni++] = t;
            } else {
                if (no >= outputs_.size() || t == Term::Any || t == Term::LowOrMedium)
                    throw std::invalid_argument("bad consequent: " + row);
                r.consequent[no++] = t;
            }
        }
        if (ni != inputs_.size() || no != outputs_.size())
            throw std::invalid_argument("row arity mismatch in " + name_ + ": " + row);
        rules_.push_back(r);
    }
}

std::vector<double> RuleTable::firing(std::span<const double> x) const {
    if (x.size() != inputs_.size()) throw std::invalid_argument("wrong input count for " + name_);
    std::array<Membership, kMaxInputs> mu{};
    for (std::size_t i = 0; i < x.size(); ++i) mu[i] = fuzzify(x[i]);
    std::vector<double> out;
    out.reserve(rules_.size());
    for (const Rule& r : rules_) {
        double w = 1.0;
        for (std::size_t i = 0; i < inputs_.size(); ++i) w = std::min(w, mu[i].of(r.antecedent[i]));
        out.push_back(w);
    }
    return out;
}

double centroid(double aL, double aM, double aH) {
    const std::array<double, 3> alpha = {aL, aM, aH};
    if (aL <= 0 && aM <= 0 && aH <= 0) return 0.5;
    std::vector<double> pts = {0.0, 0.25, 0.5, 0.75, 1.0};
    for (double a : alpha) {
        a = std::clamp(a, 0.0, 1.0);
        pts.insert(pts.end(), {(1.0 - a) / 2.0, a / 2.0, 1.0 - a / 2.0, (1.0 + a) / 2.0});
    }
    std::sort(pts.begin(), pts.end());
    auto mu = [&](double u) {
        double v = 0;
        v = std::max(v, std::min(aL, term_shape(Term::Low, u)));
        v = std::max(v, std::min(aM, term_shape(Term::Medium, u)));
        v = std::max(v, std::min(aH, term_shape(Term::High, u)));
        return v;
    };
    double area = 0, moment = 0;
    for (std::size_t k = 1; k < pts.size(); ++k) {
        const double a = pts[k - 1], b = pts[k];
        if (b <= a) continue;
        const double fa = mu(a), fb = mu(b);
        area += (b - a) * (fa + fb) / 2.0;
        moment += (b - a) * (fa * (2.0 * a + b) + fb * (a + 2.0 * b)) / 6.0;
    }
    return area > 0 ? moment / area : 0.5;
}

std::array<double, kMaxOutputs> RuleTable::infer(std::span<const double> x) const {
    const std::vector<double> w = firing(x);
    std::array<double, kMaxOutputs> out{};
    for (std::size_t o = 0; o < outputs_.size(); ++o) {
        std::array<double, 3> alpha{};
        for (std::size_t k = 0; k < rules_.size(); ++k) {
            const auto t = static_cast<std::size_t>(rules_[k].consequent[o]);
            alpha[t] = std::max(alpha[t], w[k]);
        }
        const OutputRange& r = outputs_[o];
        out[o] = r.lo + (r.hi - r.lo) * centroid(alpha[0], alpha[1], alpha[2]);
    }
    return out;
}

namespace {

constexpr std::string_view kGlvaRows[] = {
    "L   L   L   L   L/M | L L L L",
    "L   L   L   H   L/M | L L L H",
    "L   L   H   L   L/M | L L H L",
    "L   L   H   H   L/M | L L H H",
    "L   H   L   L   L/M | L H L L",
    "L   H   L   H   L/M | L H L H",
    "L   H   H   L   L/M | L H H L",
    "L   H   H   H   L/M | L H H H",
    "H   L   L   L   L/M | H L L L",
    "H   L   L   H   L/M | H L L H",
    "H   L   H   L   L/M | H L H L",
    "H   L   H   H   L/M | H L H H",
    "H   H   L   L   L/M | H H L L",
    "H   H   L   H   L/M | H H L H",
    "H   H   H   L   L/M | H H H L",
    "H   H   H   H   L/M | H H H H",
    "M   M   M   M   L/M | M M M M",
    "Any Any Any Any H   | L H L H",
};

constexpr std::string_view kUdvdRows[] = {
    "L   L   L   L   L/M | L L L",
    "L   L   L   H   L/M | L L L",
    "L   L   H   L   L/M | L H L",
    "L   L   H   H   L/M | L H L",
    "L   H   L   L   L/M | L L L",
    "L   H   L   H   L/M | L L L",
    "L   H   H   L   L/M | L H L",
    "L   H   H   H   L/M | L H L",
    "H   L   L   L   L/M | H L L",
    "H   L   L   H   L/M | H L L",
    "H   L   H   L   L/M | H H L",
    "H   L   H   H   L/M | H H L",
    "H   H   L   L   L/M | H L L",
    "H   H   L   H   L/M | H L L",
    "H   H   H   L   L/M | H H L",
    "H   H   H   H   L/M | H H H",
    "M   M   M   M   L/M | M M M",
    "Any Any Any Any H   | L L L",
};

constexpr std::string_view kEdelsRows[] = {
    "L   L   L   L   L/M | H H L H H L",
    "L   L   L   H   L/M | H H L L H L",
    "L   L   H   L   L/M | H H L H L L",
    "L   L   H   H   L/M | H H L H L H",
    "L   H   L   L   L/M | L H H H H L",
    "L   H   L   H   L/M | L H H L H H",
    "L   H   H   L   L/M | L H H H L L",
    "L   H   H   H   L/M | L H H H L H",
    "H   L   L   L   L/M | H L L H H L",
    "H   L   L   H   L/M | H L L L H H",
    "H   L   H   L   L/M | L H H L H H",
    "H   L   H   H   L/M | H L L H L H",
    "H   H   L   L   L/M | H L H H H L",
    "H   H   L   H   L/M | H L H L H H",
    "H   H   H   L   L/M | H L H H L L",
    "H   H   H   H   L/M | H L H H L H",
    "M   M   M   M   L/M | M M M M M M",
    "Any Any Any Any H   | L H L L H L",
};

// Blank NIT / stagnation cells in the source table repeat the row above.
constexpr std::string_view kOperatorRows[] = {
    "L L  L L L | L L L",
    "L L  L L H | L L H",
    "L L  L H L | L H L",
    "L L  L H H | L H H",
    "L L  H L L | H L L",
    "L L  H L H | H L H",
    "L L  H H L | H H L",
    "L L  H H H | H H H",
    "L H  L L L | H H H",
    "L H  L L H | H H L",
    "L H  L H L | H L H",
    "L H  L H H | H L L",
    "L H  H L L | L H H",
    "L H  H L H | L H L",
    "L H  H H L | L L H",
    "L H  H H H | L L L",
    "M M  M M M | M M M",
    "H L  L L L | H H H",
    "H L  L L H | H H L",
    "H L  L H L | H L H",
    "H L  L H H | H L L",
    "H L  H L L | L H H",
    "H L  H L H | L H L",
    "H L  H H L | L L H",
    "H L  H H H | L L L",
    "H H  L L L | L L L",
    "H H  L L H | L L H",
    "H H  L H L | L H L",
    "H H  L H H | L H H",
    "H H  H L L | H L L",
    "H H  H L H | H L H",
    "H H  H H L | H H L",
    "H H  H H H | H H H",
};

} // namespace

const RuleTable& glva_table() {
    static const RuleTable t("glva", {"NRP1", "NRP2", "NRP3", "NRP4", "NIT"},
                             {{"beta1", 0, 2}, {"c1", 0, 2}, {"beta2", 0, 2}, {"c2", 0, 2}}, kGlvaRows);
    return t;
}

const RuleTable& udvd_table() {
    static const RuleTable t("udvd", {"NRP1", "NRP2", "NRP3", "NRP4", "NIT"},
                             {{"w1", 0, 1}, {"w2", 0, 1}, {"w3", 0, 1}}, kUdvdRows);
    return t;
}

const RuleTable& edels_table() {
    static const RuleTable t("edels", {"NRP5", "NRP6", "NRP7", "NRP8", "NIT"},
                             {{"F1", 0, 2}, {"F2", 0, 2}, {"F3", 0, 2}, {"F4", 0, 2}, {"F5", 0, 2}, {"F6", 0, 2}},
                             kEdelsRows);
    return t;
}

const RuleTable& operator_table() {
    static const RuleTable t("operators", {"NIT", "Stagnation", "PGLVA", "PUDVD", "PEDELS"},
                             {{"PGLVA", 0, 1}, {"PUDVD", 0, 1}, {"PEDELS", 0, 1}}, kOperatorRows);
    return t;
}

GlvaParams adapt_glva(double nrp1, double nrp2, double nrp3, double nrp4, double nit) {
    const std::array<double, 5> x = {nrp1, nrp2, nrp3, nrp4, nit};
    const auto y = glva_table().infer(x);
    return {y[0], y[1], y[2], y[3]};
}

UdvdParams adapt_udvd(double nrp1, double nrp2, double nrp3, double nrp4, double nit) {
    const std::array<double, 5> x = {nrp1, nrp2, nrp3, nrp4, nit};
    const auto y = udvd_table().infer(x);
    return {y[0], y[1], y[2]};
}

EdelsParams adapt_edels(double nrp5, double nrp6, double nrp7, double nrp8, double nit) {
    const std::array<double, 5> x = {nrp5, nrp6, nrp7, nrp8, nit};
    const auto y = edels_table().infer(x);
    EdelsParams p{};
    std::copy_n(y.begin(), 6, p.F.begin());
    return p;
}

OperatorProbabilities select_operators(double nit, double stagnation, const OperatorProbabilities& prior) {
    const std::array<double, 5> x = {nit, stagnation, prior.glva, prior.udvd, prior.edels};
    const auto y = operator_table().infer(x);
    return {y[0], y[1], y[2]};
}

} // namespace rcwall::fuzzy
