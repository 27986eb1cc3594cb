#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rcwall::fuzzy {

enum class Term : unsigned char { Low, Medium, High, Any, LowOrMedium };

struct Membership {
    double low = 0;
    double medium = 0;
    double high = 0;

    double of(Term t) const;
};

/// Triangular partition on [0,1] with peaks at 0, 0.5 and 1. Input is clamped.
Membership fuzzify(double x);

inline constexpr std::size_t kMaxInputs = 5;
inline constexpr std::size_t kMaxOutputs = 6;

struct OutputRange {
    std::string name;
    double lo = 0;
    double hi = 1;
};

struct Rule {
    std::array<Term, kMaxInputs> antecedent{};
    std::array<Term, kMaxOutputs> consequent{};
};

class RuleTable {
public:
    /// Rows are whitespace separated terms (L, M, H, Any, "L/M"), inputs first,
    /// then a '|' and one L/M/H per output. Throws std::invalid_argument on a
    /// malformed row.
    RuleTable(std::string name, std::vector<std::string> inputs, std::vector<OutputRange> outputs,
              std::span<const std::string_view> rows);

    const std::string& name() const { return name_; }
    std::size_t input_count() const { return inputs_.size(); }
    std::size_t output_count() const { return outputs_.size(); }
    const std::vector<std::string>& inputs() const { return inputs_; }
    const std::vector<OutputRange>& outputs() const { return outputs_; }
    const std::vector<Rule>& rules() const { return rules_; }

    /// Firing strength of every rule (min over antecedents).
    std::vector<double> firing(std::span<const double> x) const;

    /// Mamdani inference: min-AND, max aggregation of clipped output terms,
    /// centroid defuzzification. Zero total firing on an output returns the
    /// midpoint of its range.
    std::array<double, kMaxOutputs> infer(std::span<const double> x) const;

private:
    std::string name_;
    std::vector<std::string> inputs_;
    std::vector<OutputRange> outputs_;
    std::vector<Rule> rules_;
};

/// Centroid over the unit interval of max(min(aL, L), min(aM, M), min(aH, H)).
/// Exact: the aggregate is piecewise linear between the breakpoints used.
double centroid(double alpha_low, double alpha_medium, double alpha_high);

const RuleTable& glva_table();
const RuleTable& udvd_table();
const RuleTable& edels_table();
const RuleTable& operator_table();

struct GlvaParams {
    double beta1, c1, beta2, c2;
};
struct UdvdParams {
    double w1, w2, w3;
};
struct EdelsParams {
    std::array<double, 6> F;
};
struct OperatorProbabilities {
    double glva = 0.5;
    double udvd = 0.5;
    double edels = 0.5;
};

GlvaParams adapt_glva(double nrp1, double nrp2, double nrp3, double nrp4, double nit);
UdvdParams adapt_udvd(double nrp1, double nrp2, double nrp3, double nrp4, double nit);
EdelsParams adapt_edels(double nrp5, double nrp6, double nrp7, double nrp8, double nit);
OperatorProbabilities select_operators(double nit, double stagnation, const OperatorProbabilities& prior);

} // namespace rcwall::fuzzy
