#include <doctest.h>

#include <random>
#include <stdexcept>

#include "rcwall/objective.hpp"
#include "rcwall/problem.hpp"

using namespace rcwall;

TEST_CASE("objective arithmetic") {
    const DesignParameters p = preset_parameters(Example::One);
    CHECK(objective_value(100, 1, p, ObjectiveKind::Cost) == doctest::Approx(80.0));
    CHECK(objective_value(100, 1, p, ObjectiveKind::Weight) == doctest::Approx(2450.0));
    CHECK(objective_value(100, 1, p, ObjectiveKind::Co2) == doctest::Approx(506.94));
}

TEST_CASE("concrete volume and steel weight of a known design") {
    const DesignParameters p = preset_parameters(Example::One);
    DesignVector d;
    d.x = {1.51, 0.78, 0.20, 0.20, 0.27, 1.31, 0.20, 0.20};
    d.r = {28, 18, 18, 7};
    // stem 0.2 * 3, base 1.51 * 0.27, key 0.2 * 0.2
    const double vc = 0.6 + 0.4077 + 0.04;
    CHECK(concrete_volume(d, p) == doctest::Approx(vc));

    const double lengths[4] = {3 + 0.27 - 0.14, 0.78 - 0.14, 1.51 - 0.78 - 0.20 - 0.14, 0.20 + 0.27 - 0.14};
    double steel = 0;
    for (int k = 0; k < 4; ++k) steel += lookup(d.r[k]).area_cm2 * 1e-4 * lengths[k] * 7850;
    steel += 0.002 * vc * 7850;
    CHECK(steel_weight(d, p) == doctest::Approx(steel));

    const auto cost = evaluate_objective(d, p, ObjectiveKind::Cost);
    const auto co2 = evaluate_objective(d, p, ObjectiveKind::Co2);
    CHECK(cost.steel_weight == co2.steel_weight);
    CHECK(cost.concrete_volume == co2.concrete_volume);
    CHECK(cost.value == doctest::Approx(0.4 * steel + 40 * vc));
}

TEST_CASE("objective names") {
    CHECK(parse_objective("cost") == ObjectiveKind::Cost);
    CHECK(parse_objective("co2") == ObjectiveKind::Co2);
    CHECK(to_string(ObjectiveKind::Weight) == "weight");
    CHECK_THROWS_AS(parse_objective("volume"), std::invalid_argument);
}

TEST_CASE("penalty") {
    ConstraintVector ok;
    ok.g.fill(-0.1);
    const PenalizedFitness f = penalize(100, ok);
    CHECK(f.penalized == 100.0);
    CHECK(f.power == doctest::Approx(0.01));
    CHECK(penalize(50, ok).power == doctest::Approx(0.02));

    ConstraintVector bad = ok;
    bad.g[7] = 0.1;
    CHECK(penalize(100, bad).penalized == doctest::Approx(100 + 1e13));
    CHECK(penalize(100, bad, 1.0).penalized == doctest::Approx(100.01));

    CHECK_THROWS_AS(penalize(0, ok), std::invalid_argument);
    CHECK_THROWS_AS(penalize(-3, ok), std::invalid_argument);
}

TEST_CASE("power decreases with the penalized value") {
    ConstraintVector g;
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> u(0.0, 0.5);
    double last_pen = 0, last_pow = 1e300;
    for (int k = 0; k < 200; ++k) {
        g.g[0] = -0.5 + 0.005 * k + u(gen) * 1e-6;
        const PenalizedFitness f = penalize(60, g);
        CHECK(f.penalized >= 60);
        CHECK(f.power > 0);
        if (f.penalized > last_pen) CHECK(f.power < last_pow);
        CHECK((f.penalized == 60) == g.feasible());
        last_pen = f.penalized;
        last_pow = f.power;
    }
}

TEST_CASE("problem evaluation marks feasibility") {
    const Problem pr = Problem::make(Example::One, 1, ObjectiveKind::Cost);
    Position p{1.51, 0.78, 0.20, 0.20, 0.27, 1.31, 0.20, 0.20, 28, 18, 18, 7};
    const Evaluation e = pr.evaluate(p);
    CHECK(e.raw > 0);
    CHECK(e.power == doctest::Approx(1 / e.penalized));
    CHECK(e.feasible == pr.analysis(p).constraints.feasible());
}
