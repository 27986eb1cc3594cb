#include "rcwall/baselines.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "rcwall/rng.hpp"

namespace rcwall {

namespace {

void check_sizes(int iterations, int population, int min_population) {
    if (iterations < 1) throw std::invalid_argument("iterations must be positive");
    if (population < min_population)
        throw std::invalid_argument("population must be at least " + std::to_string(min_population));
}

Position random_position(const Bounds& b, Rng& rng) {
    Position p{};
    for (std::size_t d = 0; d < kDesignVars; ++d) p[d] = b.lower[d] + rng.uniform() * (b.upper[d] - b.lower[d]);
    return p;
}

void finish(RunRecord& rec, const Problem& problem, const BestTracker& best, std::uint64_t evals,
            std::uint64_t seed) {
    rec.seed = seed;
    rec.best_position = best.position;
    rec.best = best.eval;
    rec.constraints = problem.analysis(best.position).constraints;
    rec.evaluations = evals;
}

} // namespace

RunRecord run_pso(const Problem& problem, const PsoConfig& cfg, std::uint64_t seed) {
    check_sizes(cfg.iterations, cfg.population, 1);
    Rng rng(seed);
    const Bounds& b = problem.bounds;
    const auto n = static_cast<std::size_t>(cfg.population);

    Position vmax{};
    for (std::size_t d = 0; d < kDesignVars; ++d) vmax[d] = cfg.velocity_fraction * (b.upper[d] - b.lower[d]);

    struct Particle {
        Position x{}, v{}, best_x{};
        Evaluation e{}, best_e{};
    };
    std::vector<Particle> swarm(n);
    BestTracker global;
    std::uint64_t evals = 0;
    for (Particle& p : swarm) {
        p.x = random_position(b, rng);
        p.e = problem.evaluate(p.x);
        ++evals;
        p.best_x = p.x;
        p.best_e = p.e;
        global.offer(p.x, p.e);
    }

    RunRecord rec;
    rec.best_penalized.reserve(static_cast<std::size_t>(cfg.iterations));
    rec.best_raw.reserve(static_cast<std::size_t>(cfg.iterations));
    double w = cfg.inertia;
    for (int t = 0; t < cfg.iterations; ++t) {
        for (Particle& p : swarm) {
            for (std::size_t d = 0; d < kDesignVars; ++d) {
                const double r1 = rng.uniform(), r2 = rng.uniform();
                double v = w * p.v[d] + cfg.c1 * r1 * (p.best_x[d] - p.x[d]) +
                           cfg.c2 * r2 * (global.position[d] - p.x[d]);
                v = std::clamp(v, -vmax[d], vmax[d]);
                double x = p.x[d] + v;
                if (x < b.lower[d] || x > b.upper[d]) v = -v;
                p.v[d] = v;
                p.x[d] = std::clamp(x, b.lower[d], b.upper[d]);
            }
            p.e = problem.evaluate(p.x);
            ++evals;
            if (p.e.penalized < p.best_e.penalized) {
                p.best_x = p.x;
                p.best_e = p.e;
                global.offer(p.x, p.e);
            }
        }
        w *= cfg.damping;
        rec.best_penalized.push_back(global.eval.penalized);
        rec.best_raw.push_back(global.eval.raw);
    }
    finish(rec, problem, global, evals, seed);
    return rec;
}

RunRecord run_de(const Problem& problem, const DeConfig& cfg, std::uint64_t seed) {
    check_sizes(cfg.iterations, cfg.population, 4);
    Rng rng(seed);
    const Bounds& b = problem.bounds;
    const auto n = static_cast<std::size_t>(cfg.population);

    std::vector<Position> x(n);
    std::vector<Evaluation> e(n);
    BestTracker global;
    std::uint64_t evals = 0;
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = random_position(b, rng);
        e[i] = problem.evaluate(x[i]);
        ++evals;
        global.offer(x[i], e[i]);
    }

    RunRecord rec;
    rec.best_penalized.reserve(static_cast<std::size_t>(cfg.iterations));
    rec.best_raw.reserve(static_cast<std::size_t>(cfg.iterations));
    for (int t = 0; t < cfg.iterations; ++t) {
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t a, bb, c;
            do a = rng.below(n); while (a == i);
            do bb = rng.below(n); while (bb == i || bb == a);
            do c = rng.below(n); while (c == i || c == a || c == bb);
            const std::size_t forced = rng.below(kDesignVars);
            Position trial = x[i];
            for (std::size_t d = 0; d < kDesignVars; ++d) {
                if (d == forced || rng.uniform() <= cfg.crossover) {
                    const double m = x[a][d] + cfg.F * (x[bb][d] - x[c][d]);
                    trial[d] = std::clamp(m, b.lower[d], b.upper[d]);
                }
            }
            const Evaluation te = problem.evaluate(trial);
            ++evals;
            if (te.penalized < e[i].penalized) {
                x[i] = trial;
                e[i] = te;
                global.offer(trial, te);
            }
        }
        rec.best_penalized.push_back(global.eval.penalized);
        rec.best_raw.push_back(global.eval.raw);
    }
    finish(rec, problem, global, evals, seed);
    return rec;
}

} // namespace rcwall
