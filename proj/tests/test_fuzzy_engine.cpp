#include <doctest.h>

#include <array>
#include <random>
#include <stdexcept>
#include <vector>

#include "rcwall/fuzzy_engine.hpp"

using namespace rcwall::fuzzy;

namespace {

constexpr double kLow = 1.0 / 6, kMid = 0.5, kHigh = 5.0 / 6;

void check_terms(const std::array<double, kMaxOutputs>& out, const RuleTable& t, std::vector<double> expect_unit) {
    REQUIRE(expect_unit.size() == t.output_count());
    for (std::size_t k = 0; k < expect_unit.size(); ++k) {
        const OutputRange& r = t.outputs()[k];
        CAPTURE(r.name);
        CHECK(out[k] == doctest::Approx(r.lo + expect_unit[k] * (r.hi - r.lo)).epsilon(1e-12));
    }
}

std::array<double, 3> grid() { return {0.0, 0.5, 1.0}; }

} // namespace

TEST_CASE("fuzzify") {
    auto m = fuzzify(0);
    CHECK(m.low == 1.0);
    CHECK(m.medium == 0.0);
    CHECK(m.high == 0.0);
    m = fuzzify(1);
    CHECK(m.high == 1.0);
    m = fuzzify(0.25);
    CHECK(m.low == doctest::Approx(0.5));
    CHECK(m.medium == doctest::Approx(0.5));
    CHECK(m.high == 0.0);
    CHECK(fuzzify(-2).low == 1.0);
    CHECK(fuzzify(7).high == 1.0);
    CHECK(fuzzify(0.3).of(Term::LowOrMedium) == doctest::Approx(0.6));
    CHECK(fuzzify(0.3).of(Term::Any) == 1.0);
    for (int k = 0; k <= 10000; ++k) {
        const Membership mm = fuzzify(k / 10000.0);
        CHECK(std::abs(mm.low + mm.medium + mm.high - 1.0) < 1e-12);
    }
}

TEST_CASE("centroid") {
    CHECK(centroid(1, 0, 0) == doctest::Approx(kLow).epsilon(1e-12));
    CHECK(centroid(0, 0, 1) == doctest::Approx(kHigh).epsilon(1e-12));
    CHECK(centroid(0, 1, 0) == doctest::Approx(kMid).epsilon(1e-12));
    CHECK(centroid(0.4, 0, 0.4) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(centroid(0, 0, 0) == 0.5);

    // Riemann sum of the clipped aggregate as an independent check.
    auto tri = [](double x, double c) { return std::max(0.0, 1.0 - std::abs(x - c) / 0.5); };
    std::mt19937_64 gen(1);
    std::uniform_real_distribution<double> u(0, 1);
    for (int k = 0; k < 50; ++k) {
        const double a = u(gen), b = u(gen), c = u(gen);
        double num = 0, den = 0;
        const int n = 200000;
        for (int i = 0; i < n; ++i) {
            const double x = (i + 0.5) / n;
            const double mu = std::max({std::min(a, tri(x, 0)), std::min(b, tri(x, 0.5)), std::min(c, tri(x, 1))});
            num += x * mu;
            den += mu;
        }
        CHECK(centroid(a, b, c) == doctest::Approx(num / den).epsilon(1e-6));
    }
}

TEST_CASE("rule tables have the expected sizes") {
    CHECK(glva_table().rules().size() == 18);
    CHECK(udvd_table().rules().size() == 18);
    CHECK(edels_table().rules().size() == 18);
    CHECK(operator_table().rules().size() == 33);
    const Rule& r11 = edels_table().rules()[10];
    const Term expect[] = {Term::Low, Term::High, Term::High, Term::Low, Term::High, Term::High};
    for (int k = 0; k < 6; ++k) CHECK(r11.consequent[static_cast<std::size_t>(k)] == expect[k]);
}

TEST_CASE("malformed rows are rejected") {
    const std::string_view bad_term[] = {"L Q | L"};
    CHECK_THROWS_AS(RuleTable("t", {"a", "b"}, {{"y", 0, 1}}, bad_term), std::invalid_argument);
    const std::string_view bad_arity[] = {"L | L"};
    CHECK_THROWS_AS(RuleTable("t", {"a", "b"}, {{"y", 0, 1}}, bad_arity), std::invalid_argument);
    const std::string_view ok[] = {"L H | M"};
    const RuleTable t("t", {"a", "b"}, {{"y", 0, 1}}, ok);
    const double wrong[] = {0.1};
    CHECK_THROWS_AS(t.infer(wrong), std::invalid_argument);
}

TEST_CASE("GLVA adaptation") {
    const GlvaParams start = adapt_glva(0, 0, 0, 0, 0);
    CHECK(start.beta1 == doctest::Approx(2 * kLow));
    CHECK(start.c1 == doctest::Approx(2 * kLow));
    CHECK(start.beta2 == doctest::Approx(2 * kLow));
    CHECK(start.c2 == doctest::Approx(2 * kLow));
    const GlvaParams end = adapt_glva(0.3, 0.8, 0.1, 0.6, 1);
    CHECK(end.beta1 == doctest::Approx(2 * kLow));
    CHECK(end.c1 == doctest::Approx(2 * kHigh));
    CHECK(end.beta2 == doctest::Approx(2 * kLow));
    CHECK(end.c2 == doctest::Approx(2 * kHigh));
}

TEST_CASE("UDVD adaptation") {
    const UdvdParams w = adapt_udvd(0, 0, 0, 0, 0);
    CHECK(w.w1 == doctest::Approx(kLow));
    CHECK(w.w2 == doctest::Approx(kLow));
    CHECK(w.w3 == doctest::Approx(kLow));
    const double x[] = {1, 0, 1, 0, 0.5};
    check_terms(udvd_table().infer(x), udvd_table(), {kHigh, kHigh, kLow});
}

TEST_CASE("EDELS adaptation") {
    const EdelsParams f = adapt_edels(1, 0, 1, 0, 0);
    const double expect[] = {kLow, kHigh, kHigh, kLow, kHigh, kHigh};
    for (int k = 0; k < 6; ++k) CHECK(f.F[static_cast<std::size_t>(k)] == doctest::Approx(2 * expect[k]));
    const EdelsParams late = adapt_edels(0.2, 0.9, 0.4, 0.7, 1);
    const double expect_late[] = {kLow, kHigh, kLow, kLow, kHigh, kLow};
    for (int k = 0; k < 6; ++k) CHECK(late.F[static_cast<std::size_t>(k)] == doctest::Approx(2 * expect_late[k]));
}

TEST_CASE("operator selection") {
    const OperatorProbabilities low{0, 0, 0};
    const OperatorProbabilities keep = select_operators(0, 0, low);
    CHECK(keep.glva == doctest::Approx(kLow));
    CHECK(keep.udvd == doctest::Approx(kLow));
    CHECK(keep.edels == doctest::Approx(kLow));

    const OperatorProbabilities flip = select_operators(0, 1, low);
    CHECK(flip.glva == doctest::Approx(kHigh));
    CHECK(flip.udvd == doctest::Approx(kHigh));
    CHECK(flip.edels == doctest::Approx(kHigh));

    for (double a : {0.0, 1.0})
        for (double b : {0.0, 1.0})
            for (double c : {0.0, 1.0}) {
                const OperatorProbabilities next = select_operators(1, 1, {a, b, c});
                CHECK(next.glva == doctest::Approx(a == 0 ? kLow : kHigh));
                CHECK(next.udvd == doctest::Approx(b == 0 ? kLow : kHigh));
                CHECK(next.edels == doctest::Approx(c == 0 ? kLow : kHigh));
            }
}

TEST_CASE("every rule dominates at some corner point") {
    for (const RuleTable* t : {&glva_table(), &udvd_table(), &edels_table(), &operator_table()}) {
        CAPTURE(t->name());
        const std::size_t n = t->input_count();
        std::vector<bool> reached(t->rules().size(), false);
        std::vector<double> x(n);
        std::size_t total = 1;
        for (std::size_t k = 0; k < n; ++k) total *= 3;
        for (std::size_t code = 0; code < total; ++code) {
            std::size_t c = code;
            for (std::size_t k = 0; k < n; ++k, c /= 3) x[k] = grid()[c % 3];
            const std::vector<double> w = t->firing(x);
            std::size_t best = 0;
            int ties = 0;
            for (std::size_t r = 0; r < w.size(); ++r) {
                if (w[r] > w[best]) {
                    best = r;
                    ties = 0;
                } else if (r != best && w[r] == w[best]) {
                    ++ties;
                }
            }
            if (w[best] > 0 && ties == 0) reached[best] = true;
        }
        for (std::size_t r = 0; r < reached.size(); ++r) {
            CAPTURE(r + 1);
            CHECK(reached[r]);
        }
    }
}

TEST_CASE("outputs stay within their ranges") {
    std::mt19937_64 gen(9);
    std::uniform_real_distribution<double> u(0, 1);
    for (const RuleTable* t : {&glva_table(), &udvd_table(), &edels_table(), &operator_table()}) {
        std::vector<double> x(t->input_count());
        for (int k = 0; k < 2000; ++k) {
            for (double& v : x) v = u(gen);
            const auto out = t->infer(x);
            for (std::size_t j = 0; j < t->output_count(); ++j) {
                CHECK(out[j] >= t->outputs()[j].lo);
                CHECK(out[j] <= t->outputs()[j].hi);
            }
            CHECK(out == t->infer(x));
        }
    }
}
