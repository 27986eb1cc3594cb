#include <doctest.h>

#include <cmath>
#include <set>

#include "rcwall/baselines.hpp"
#include "rcwall/batch.hpp"
#include "rcwall/faglsud.hpp"

using namespace rcwall;

namespace {

const Problem& ex1_cost() {
    static const Problem p = Problem::make(Example::One, 1, ObjectiveKind::Cost);
    return p;
}

bool same_history(const RunRecord& a, const RunRecord& b) {
    return a.best_penalized == b.best_penalized && a.best_raw == b.best_raw && a.best_position == b.best_position &&
           a.evaluations == b.evaluations && a.constraints.g == b.constraints.g;
}

} // namespace

TEST_CASE("initial population") {
    Rng rng(99);
    const auto pop = initialize(ex1_cost(), 10000, rng);
    double mean = 0;
    for (const Country& c : pop) {
        for (double v : c.velocity) CHECK(v == 0.0);
        CHECK(ex1_cost().bounds.contains(c.position));
        mean += c.position[0] / 10000.0;
    }
    CHECK(std::abs(mean - 2.405) < 0.02);

    Rng a(5), b(5);
    const auto pa = initialize(ex1_cost(), 20, a), pb = initialize(ex1_cost(), 20, b);
    for (std::size_t k = 0; k < pa.size(); ++k) CHECK(pa[k].position == pb[k].position);
    CHECK_THROWS(initialize(ex1_cost(), 1, a));
}

TEST_CASE("colony allocation") {
    const double two_one[] = {2, 1};
    CHECK(allocate_colonies(two_one, 3) == std::vector<int>{2, 1});
    const double flat[] = {0, 0, 0};
    CHECK(allocate_colonies(flat, 30) == std::vector<int>{10, 10, 10});
    const double one[] = {0.7};
    CHECK(allocate_colonies(one, 30) == std::vector<int>{30});
    const double skew[] = {0.5, 0.3, 0.2, 0.0};
    const auto c = allocate_colonies(skew, 7);
    CHECK(c[0] + c[1] + c[2] + c[3] == 7);
    CHECK(c[0] == 4);  // floor(3.5) plus the residue of 1

    Rng rng(1);
    std::vector<Country> pop = initialize(ex1_cost(), 50, rng);
    for (Country& x : pop) x.power = ex1_cost().evaluate(x.position).power;
    const auto empires = form_empires(pop, 20, rng);
    REQUIRE(empires.size() == 20);
    std::set<std::size_t> seen;
    std::size_t colonies = 0;
    double weakest_imperialist = 1e300;
    for (const Empire& e : empires) {
        seen.insert(e.imperialist);
        weakest_imperialist = std::min(weakest_imperialist, pop[e.imperialist].power);
        colonies += e.colonies.size();
        seen.insert(e.colonies.begin(), e.colonies.end());
    }
    CHECK(colonies == 30);
    CHECK(seen.size() == 50);
    for (const Empire& e : empires)
        for (std::size_t k : e.colonies) CHECK(pop[k].power <= weakest_imperialist);
    CHECK(form_empires(pop, 1, rng).front().colonies.size() == 49);
}

TEST_CASE("normalised relative power and stagnation") {
    CHECK(normalized_relative_power(0.5, 0.3, 0.5) == doctest::Approx(0.4));
    CHECK(normalized_relative_power(0.5, 0.5, 0.5) == 0.0);
    CHECK(normalized_relative_power(1.0, 0.0, 0.5) == 1.0);
    CHECK(normalized_relative_power(0.2, 0.1, 0.0) == 0.0);

    const double constant[] = {0.3, 0.3, 0.3};
    CHECK(compute_stagnation(constant) == 1.0);
    const double half[] = {1, 2};
    CHECK(compute_stagnation(half) == doctest::Approx(0.5));
    CHECK(compute_stagnation({}) == 1.0);
    const double improving[] = {1e-12, 0.5, 1.0};
    CHECK(compute_stagnation(improving) < 1e-11);
}

TEST_CASE("operator update arithmetic") {
    CHECK(glva_component(0, 2, 2, 1, 1, 1, 1) == 4.0);
    CHECK(glva_component(1.5, 1.5, 1.5, 1.3, 0.7, 0.4, 0.9) == 0.0);
    CHECK(udvd_component(0, 1, 2, 1, 1) == 3.0);
    CHECK(udvd_component(0, 1, 2, 0, 1) == 0.0);
    CHECK(udvd_component(0.4, 0, 0.4, 0.8, 0.6) == 0.0);
    CHECK(edels_component(1, 2, 3, 4, 5, 0, 0, 0) == 0.0);
    // single pull term drives the base onto its leader
    CHECK(4 + edels_component(1, 1, 7, 4, 0, 0, 1, 0) == 7.0);
    // (a - b) = (1, -2), leader - base = (3, 1), base - worst = (-1, 4)
    const double F[3] = {0.5, 0.25, 2.0};
    CHECK(edels_component(2, 1, 4, 1, 2, F[0], F[1], F[2]) == doctest::Approx(0.5 + 0.75 - 2.0));
    CHECK(edels_component(0, 2, 3, 2, -2, F[0], F[1], F[2]) == doctest::Approx(-1.0 + 0.25 + 8.0));
}

TEST_CASE("velocity limits") {
    const Bounds& b = ex1_cost().bounds;
    const Position gb{2, 0.5, 0.25, 0.25, 0.3, 2, 0.25, 0.25, 100, 100, 100, 100};
    CHECK(velocity_limit(gb, gb, 4, 10, b).vmax == Position{});

    Position p = gb;
    p[0] = 1.5;
    p[8] = 50;
    const auto l1 = velocity_limit(p, gb, 3, 10, b), l2 = velocity_limit(p, gb, 6, 10, b);
    CHECK(l1.vmax[0] == doctest::Approx(10 * (2.19 / 3.5) * 0.5 / 3));
    CHECK(l1.vmax[8] == doctest::Approx(10 * (222.0 / 223) * 50 / 3));
    for (std::size_t d = 0; d < kDesignVars; ++d) CHECK(l2.vmax[d] == doctest::Approx(l1.vmax[d] / 2));

    Position pos = gb;
    Position vel{};
    vel[0] = 5.0;
    VelocityLimit wide;
    wide.vmax.fill(100.0);
    move_with_limits(pos, vel, wide, b);
    CHECK(pos[0] == 3.5);
    CHECK(vel[0] == -5.0);

    Position still = gb;
    Position v2{};
    v2.fill(1.0);
    move_with_limits(still, v2, velocity_limit(still, gb, 1, 10, b), b);
    CHECK(still == gb);
    CHECK(v2 == Position{});
}

TEST_CASE("FAGLSUD run contracts") {
    FaglsudConfig cfg;
    cfg.iterations = 60;
    const Problem& pr = ex1_cost();
    std::size_t empire_count = 0;
    bool first = true;
    int calls = 0;
    double last = 1e300;
    auto observer = [&](const FaglsudState& s) {
        ++calls;
        if (first) {
            empire_count = s.empires.size();
            first = false;
        }
        CHECK(s.empires.size() == empire_count);
        CHECK(s.countries.size() == 50);
        std::size_t members = 0;
        for (const Empire& e : s.empires) members += 1 + e.colonies.size();
        CHECK(members == 50);
        double best_power = 0;
        for (const Country& c : s.countries) {
            CHECK(pr.bounds.contains(c.position));
            best_power = std::max(best_power, c.power);
        }
        CHECK(s.global.eval.power >= best_power);
        CHECK(s.global.eval.penalized <= last);
        last = s.global.eval.penalized;
        CHECK(s.probabilities.glva >= 0);
        CHECK(s.probabilities.glva <= 1);
    };
    const RunRecord a = run_faglsud(pr, cfg, 17, observer);
    CHECK(calls == 60);
    CHECK(a.best_penalized.size() == 60);
    for (std::size_t t = 1; t < a.best_penalized.size(); ++t) CHECK(a.best_penalized[t] <= a.best_penalized[t - 1]);
    CHECK(a.evaluations <= 50u * 60u * 4u + 50u);
    const DesignVector d = DesignVector::from_position(a.best_position);
    for (int r : d.r) CHECK((r >= 1 && r <= 223));
    CHECK(same_history(a, run_faglsud(pr, cfg, 17)));
    CHECK_FALSE(same_history(a, run_faglsud(pr, cfg, 18)));
}

TEST_CASE("FAGLSUD is stationary with every operator switched off") {
    FaglsudConfig cfg;
    cfg.iterations = 25;
    cfg.fixed_operators = true;
    cfg.initial = {0, 0, 0};
    std::vector<Position> start;
    bool moved = false;
    run_faglsud(ex1_cost(), cfg, 3, [&](const FaglsudState& s) {
        if (start.empty()) {
            for (const Country& c : s.countries) start.push_back(c.position);
            return;
        }
        for (std::size_t k = 0; k < start.size(); ++k) moved |= s.countries[k].position != start[k];
    });
    CHECK_FALSE(moved);
}

TEST_CASE("PSO contracts") {
    PsoConfig cfg;
    cfg.iterations = 50;
    const RunRecord a = run_pso(ex1_cost(), cfg, 4);
    CHECK(a.best_penalized.size() == 50);
    for (std::size_t t = 1; t < a.best_penalized.size(); ++t) CHECK(a.best_penalized[t] <= a.best_penalized[t - 1]);
    CHECK(ex1_cost().bounds.contains(a.best_position));
    CHECK(same_history(a, run_pso(ex1_cost(), cfg, 4)));

    PsoConfig frozen = cfg;
    frozen.inertia = 0;
    frozen.c1 = frozen.c2 = 0;
    const RunRecord f = run_pso(ex1_cost(), frozen, 4);
    for (double v : f.best_penalized) CHECK(v == f.best_penalized.front());
    CHECK(f.evaluations == 50u + 50u * 50u);
    CHECK_THROWS(run_pso(ex1_cost(), PsoConfig{0, 50}, 1));
}

TEST_CASE("DE contracts") {
    DeConfig cfg;
    cfg.iterations = 50;
    const RunRecord a = run_de(ex1_cost(), cfg, 4);
    for (std::size_t t = 1; t < a.best_penalized.size(); ++t) CHECK(a.best_penalized[t] <= a.best_penalized[t - 1]);
    CHECK(same_history(a, run_de(ex1_cost(), cfg, 4)));
    CHECK_THROWS(run_de(ex1_cost(), DeConfig{10, 3}, 1));

    // With F = 0 and no crossover, trials only copy one coordinate from another
    // member, so every coordinate of the result appeared in the initial population.
    DeConfig copy = cfg;
    copy.F = 0;
    copy.crossover = 0;
    const RunRecord c = run_de(ex1_cost(), copy, 8);
    Rng rng(8);
    const Bounds& b = ex1_cost().bounds;
    std::array<std::set<double>, kDesignVars> initial;
    for (int i = 0; i < copy.population; ++i)
        for (std::size_t d = 0; d < kDesignVars; ++d) initial[d].insert(b.lower[d] + rng.uniform() * (b.upper[d] - b.lower[d]));
    for (std::size_t d = 0; d < kDesignVars; ++d) CHECK(initial[d].count(c.best_position[d]) == 1);
}

TEST_CASE("parallel batches equal serial batches") {
    for (Algorithm alg : {Algorithm::Faglsud, Algorithm::Pso, Algorithm::De}) {
        BatchConfig cfg{alg, 4, 20, 30, 123};
        const auto s = run_batch_serial(ex1_cost(), cfg);
        const auto p = run_batch_parallel(ex1_cost(), cfg);
        REQUIRE(s.size() == 4);
        REQUIRE(p.size() == 4);
        for (std::size_t k = 0; k < s.size(); ++k) {
            CHECK(same_history(s[k], p[k]));
            CHECK(s[k].seed == run_seed(cfg, static_cast<int>(k)));
        }
    }
    CHECK(run_single(ex1_cost(), BatchConfig{Algorithm::Pso, 1, 5, 2, 9}, 0).best_penalized.size() == 5);
    CHECK_THROWS(run_batch_parallel(ex1_cost(), BatchConfig{Algorithm::De, 2, 5, 3, 9}));
    CHECK_THROWS(run_batch_serial(ex1_cost(), BatchConfig{Algorithm::Pso, 0, 5, 10, 9}));
    CHECK(parse_algorithm("de") == Algorithm::De);
    CHECK_THROWS(parse_algorithm("ga"));
}

TEST_CASE("small FAGLSUD populations keep one colony") {
    const auto r = run_single(ex1_cost(), BatchConfig{Algorithm::Faglsud, 1, 10, 2, 1}, 0);
    CHECK(r.best_penalized.size() == 10);
}
