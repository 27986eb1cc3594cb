#include "rcwall/faglsud.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rcwall {

namespace {

struct Evaluator {
    const Problem& problem;
    std::uint64_t count = 0;

    Evaluation operator()(const Position& p) {
        ++count;
        return problem.evaluate(p);
    }
};

void assign(Country& c, const Evaluation& e) {
    c.eval = e;
    c.power = e.power;
    if (e.power > c.best_power) {
        c.best_power = e.power;
        c.best_position = c.position;
    }
}

// Power-proportional pick among `pool` excluding `self`; uniform when every
// candidate weight is zero.
std::size_t roulette(const std::vector<Country>& countries, std::span<const std::size_t> pool,
                     std::size_t self, Rng& rng) {
    double total = 0;
    std::size_t n = 0;
    for (std::size_t k : pool) {
        if (k == self) continue;
        total += countries[k].best_power;
        ++n;
    }
    if (n == 0) return self;
    if (!(total > 0)) {
        std::size_t pick = rng.below(n);
        for (std::size_t k : pool) {
            if (k == self) continue;
            if (pick-- == 0) return k;
        }
    }
    double r = rng.uniform() * total;
    std::size_t last = self;
    for (std::size_t k : pool) {
        if (k == self) continue;
        last = k;
        r -= countries[k].best_power;
        if (r < 0) return k;
    }
    return last;
}

struct Triple {
    std::size_t r1, r2, r3;
};

// r3 first, then r1 != r2 from the rest when there is room.
Triple pick_triple(const std::vector<std::size_t>& candidates, Rng& rng) {
    const std::size_t r3 = candidates[rng.below(candidates.size())];
    std::vector<std::size_t> pool;
    pool.reserve(candidates.size());
    for (std::size_t k : candidates)
        if (k != r3) pool.push_back(k);
    if (pool.empty()) return {r3, r3, r3};
    if (pool.size() == 1) return {pool[0], pool[0], r3};
    const std::size_t a = rng.below(pool.size());
    std::size_t b = rng.below(pool.size() - 1);
    if (b >= a) ++b;
    return {pool[a], pool[b], r3};
}

std::size_t weakest(const std::vector<Country>& countries, std::span<const std::size_t> pool) {
    std::size_t w = pool.front();
    for (std::size_t k : pool)
        if (countries[k].power < countries[w].power) w = k;
    return w;
}

} // namespace

std::vector<Country> initialize(const Problem& problem, int population, Rng& rng) {
    if (population < 2) throw std::invalid_argument("population must be at least 2");
    std::vector<Country> out(static_cast<std::size_t>(population));
    for (Country& c : out) {
        for (std::size_t d = 0; d < kDesignVars; ++d)
            c.position[d] = problem.bounds.lower[d] +
                            rng.uniform() * (problem.bounds.upper[d] - problem.bounds.lower[d]);
        c.velocity.fill(0.0);
        c.best_position = c.position;
    }
    return out;
}

std::vector<int> allocate_colonies(std::span<const double> normalized_power, int colonies) {
    const std::size_t n = normalized_power.size();
    std::vector<int> counts(n, 0);
    if (n == 0 || colonies <= 0) return counts;
    const double total = std::accumulate(normalized_power.begin(), normalized_power.end(), 0.0);
    std::size_t strongest = 0;
    for (std::size_t j = 1; j < n; ++j)
        if (normalized_power[j] > normalized_power[strongest]) strongest = j;
    int used = 0;
    for (std::size_t j = 0; j < n; ++j) {
        const double share = total > 0 ? normalized_power[j] / total : 1.0 / static_cast<double>(n);
        counts[j] = static_cast<int>(std::floor(share * colonies + 1e-9));
        used += counts[j];
    }
    counts[strongest] += colonies - used;
    return counts;
}

std::vector<Empire> form_empires(const std::vector<Country>& countries, int imperialists, Rng& rng) {
    const auto n = static_cast<int>(countries.size());
    if (imperialists < 1 || imperialists > n)
        throw std::invalid_argument("imperialist count must be in [1, population]");
    std::vector<std::size_t> order(countries.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return countries[a].power > countries[b].power; });

    std::vector<Empire> empires(static_cast<std::size_t>(imperialists));
    double weakest_power = countries[order[static_cast<std::size_t>(imperialists - 1)]].power;
    std::vector<double> normalized(empires.size());
    for (std::size_t j = 0; j < empires.size(); ++j) {
        empires[j].imperialist = order[j];
        normalized[j] = countries[order[j]].power - weakest_power;
    }
    const std::vector<int> counts = allocate_colonies(normalized, n - imperialists);

    std::vector<std::size_t> rest(order.begin() + imperialists, order.end());
    for (std::size_t k = rest.size(); k > 1; --k) std::swap(rest[k - 1], rest[rng.below(k)]);
    std::size_t next = 0;
    for (std::size_t j = 0; j < empires.size(); ++j)
        for (int c = 0; c < counts[j]; ++c) empires[j].colonies.push_back(rest[next++]);
    return empires;
}

double normalized_relative_power(double a, double b, double global) {
    if (!(global > 0)) return 0.0;
    return std::clamp(std::abs(a - b) / global, 0.0, 1.0);
}

double compute_stagnation(std::span<const double> window) {
    if (window.empty()) return 1.0;
    const auto [lo, hi] = std::minmax_element(window.begin(), window.end());
    if (!(*hi > 0)) return 1.0;
    return std::clamp(1.0 - (*hi - *lo) / *hi, 0.0, 1.0);
}

VelocityLimit velocity_limit(const Position& agent, const Position& global_best, int t, double alpha,
                             const Bounds& bounds) {
    VelocityLimit lim;
    const double tt = std::max(t, 1);
    for (std::size_t d = 0; d < kDesignVars; ++d) {
        const double vmax = bounds.upper[d];
        const double span = vmax != 0 ? (bounds.upper[d] - bounds.lower[d]) / vmax : 0.0;
        lim.vmax[d] = alpha * span * std::abs(global_best[d] - agent[d]) / tt;
    }
    return lim;
}

void move_with_limits(Position& position, Position& velocity, const VelocityLimit& limit,
                      const Bounds& bounds) {
    for (std::size_t d = 0; d < kDesignVars; ++d) {
        velocity[d] = std::clamp(velocity[d], -limit.vmax[d], limit.vmax[d]);
        position[d] += velocity[d];
        if (position[d] > bounds.upper[d]) {
            position[d] = bounds.upper[d];
            velocity[d] = -velocity[d];
        } else if (position[d] < bounds.lower[d]) {
            position[d] = bounds.lower[d];
            velocity[d] = -velocity[d];
        }
    }
}

namespace {

class Faglsud {
public:
    Faglsud(const Problem& problem, const FaglsudConfig& config, std::uint64_t seed)
        : problem_(problem), cfg_(config), rng_(seed), eval_{problem} {
        if (cfg_.iterations < 1) throw std::invalid_argument("iterations must be positive");
        if (cfg_.window < 1) throw std::invalid_argument("operator window must be positive");
    }

    RunRecord run(const FaglsudObserver& observer) {
        RunRecord rec;
        s_.countries = initialize(problem_, cfg_.population, rng_);
        for (Country& c : s_.countries) {
            assign(c, eval_(c.position));
            s_.global.offer(c.position, c.eval);
        }
        s_.empires = form_empires(s_.countries, cfg_.imperialists, rng_);
        s_.probabilities = cfg_.initial;
        imperialist_pool_.reserve(s_.empires.size());

        std::vector<double> window;
        window.reserve(static_cast<std::size_t>(cfg_.window));
        rec.best_penalized.reserve(static_cast<std::size_t>(cfg_.iterations));
        rec.best_raw.reserve(static_cast<std::size_t>(cfg_.iterations));

        for (int t = 1; t <= cfg_.iterations; ++t) {
            s_.iteration = t;
            const double nit = static_cast<double>(t) / cfg_.iterations;
            step(t, nit);

            rec.best_penalized.push_back(s_.global.eval.penalized);
            rec.best_raw.push_back(s_.global.eval.raw);
            window.push_back(s_.global.eval.power);
            if (t % cfg_.window == 0) {
                if (!cfg_.fixed_operators)
                    s_.probabilities = fuzzy::select_operators(nit, compute_stagnation(window), s_.probabilities);
                window.clear();
            }
            if (observer) observer(s_);
        }

        rec.best_position = s_.global.position;
        rec.best = s_.global.eval;
        rec.constraints = problem_.analysis(s_.global.position).constraints;
        rec.evaluations = eval_.count;
        return rec;
    }

private:
    double gpow() const { return s_.global.eval.power; }

    double nrp(double a, double b) const { return normalized_relative_power(a, b, gpow()); }

    // NRP1..NRP4 for every country, from the powers at the start of the step.
    void fuzzy_inputs(std::vector<std::array<double, 4>>& out) const {
        out.assign(s_.countries.size(), {0, 0, 0, 0});
        for (const Empire& e : s_.empires) {
            const Country& imp = s_.countries[e.imperialist];
            const double n3 = nrp(gpow(), imp.power);
            const double n4 = nrp(imp.best_power, imp.power);
            double s1 = 0, s2 = 0;
            for (std::size_t c : e.colonies) {
                const Country& col = s_.countries[c];
                const double n1 = nrp(imp.power, col.power);
                const double n2 = nrp(col.best_power, col.power);
                out[c] = {n1, n2, n3, n4};
                s1 += n1;
                s2 += n2;
            }
            const double m = e.colonies.empty() ? 1.0 : static_cast<double>(e.colonies.size());
            out[e.imperialist] = {s1 / m, s2 / m, n3, n4};
        }
    }

    void finish_move(std::size_t k, int t) {
        Country& c = s_.countries[k];
        const VelocityLimit lim = velocity_limit(c.position, s_.global.position, t, cfg_.alpha, problem_.bounds);
        move_with_limits(c.position, c.velocity, lim, problem_.bounds);
        moved_[k] = 1;
    }

    void glva(int t, double nit, const std::vector<std::array<double, 4>>& in) {
        const double p = s_.probabilities.glva;
        for (const Empire& e : s_.empires) {
            const Position imp_pos = s_.countries[e.imperialist].position;
            for (std::size_t k : e.colonies) {
                if (rng_.uniform() > p) continue;
                Country& c = s_.countries[k];
                const auto f = fuzzy::adapt_glva(in[k][0], in[k][1], in[k][2], in[k][3], nit);
                for (std::size_t d = 0; d < kDesignVars; ++d) {
                    const double r1 = rng_.uniform(), r2 = rng_.uniform();
                    c.velocity[d] =
                        glva_component(c.position[d], imp_pos[d], c.best_position[d], f.beta1, f.c1, r1, r2);
                }
                finish_move(k, t);
            }
            if (rng_.uniform() > p) continue;
            const std::size_t k = e.imperialist;
            Country& c = s_.countries[k];
            const auto f = fuzzy::adapt_glva(in[k][0], in[k][1], in[k][2], in[k][3], nit);
            for (std::size_t d = 0; d < kDesignVars; ++d) {
                const double r1 = rng_.uniform(), r2 = rng_.uniform();
                c.velocity[d] = glva_component(c.position[d], s_.global.position[d], c.best_position[d], f.beta2,
                                               f.c2, r1, r2);
            }
            finish_move(k, t);
        }
    }

    void udvd(int t, double nit, const std::vector<std::array<double, 4>>& in) {
        const double p = s_.probabilities.udvd;
        colony_pool_.clear();
        imperialist_pool_.clear();
        for (const Empire& e : s_.empires) {
            imperialist_pool_.push_back(e.imperialist);
            colony_pool_.insert(colony_pool_.end(), e.colonies.begin(), e.colonies.end());
        }
        for (std::size_t k : colony_pool_) {
            if (rng_.uniform() > p) continue;
            Country& c = s_.countries[k];
            const auto f = fuzzy::adapt_udvd(in[k][0], in[k][1], in[k][2], in[k][3], nit);
            const Position& ex = s_.countries[roulette(s_.countries, colony_pool_, k, rng_)].best_position;
            for (std::size_t d = 0; d < kDesignVars; ++d)
                c.velocity[d] = udvd_component(c.position[d], c.velocity[d], ex[d], f.w1, rng_.uniform());
            finish_move(k, t);
        }
        for (std::size_t k : imperialist_pool_) {
            if (rng_.uniform() > p) continue;
            Country& c = s_.countries[k];
            const auto f = fuzzy::adapt_udvd(in[k][0], in[k][1], in[k][2], in[k][3], nit);
            const double w = c.position == s_.global.position ? f.w3 : f.w2;
            const Position& ex = s_.countries[roulette(s_.countries, imperialist_pool_, k, rng_)].best_position;
            for (std::size_t d = 0; d < kDesignVars; ++d)
                c.velocity[d] = udvd_component(c.position[d], c.velocity[d], ex[d], w, rng_.uniform());
            finish_move(k, t);
        }
    }

    void evaluate_moved() {
        for (std::size_t k = 0; k < s_.countries.size(); ++k) {
            if (!moved_[k]) continue;
            Country& c = s_.countries[k];
            assign(c, eval_(c.position));
            s_.global.offer(c.position, c.eval);
        }
    }

    // Greedy DE-style trial around country r3; returns true when it replaced r3.
    bool trial(std::size_t r3, const Position& mutant, double cr, int t) {
        Country& target = s_.countries[r3];
        Position v{};
        const std::size_t forced = rng_.below(kDesignVars);
        for (std::size_t d = 0; d < kDesignVars; ++d)
            v[d] = (rng_.uniform() <= cr || d == forced) ? mutant[d] : target.velocity[d];
        Position x = target.position;
        const VelocityLimit lim = velocity_limit(x, s_.global.position, t, cfg_.alpha, problem_.bounds);
        move_with_limits(x, v, lim, problem_.bounds);
        const Evaluation e = eval_(x);
        if (!(e.power > target.power)) return false;
        target.position = x;
        target.velocity = v;
        assign(target, e);
        s_.global.offer(x, e);
        return true;
    }

    void edels(int t, double nit) {
        const double p = s_.probabilities.edels;
        imperialist_pool_.clear();
        for (const Empire& e : s_.empires) imperialist_pool_.push_back(e.imperialist);
        const std::size_t worst_imp = weakest(s_.countries, imperialist_pool_);
        std::vector<std::size_t> imp_candidates;
        for (std::size_t k : imperialist_pool_)
            if (k != worst_imp) imp_candidates.push_back(k);

        std::vector<std::size_t> col_candidates;
        for (const Empire& e : s_.empires) {
            if (rng_.uniform() > p) continue;
            const Country& imp = s_.countries[e.imperialist];

            bool colony_step = false;
            std::size_t worst_col = 0;
            Triple ct{};
            col_candidates.clear();
            if (!e.colonies.empty()) {
                worst_col = weakest(s_.countries, e.colonies);
                for (std::size_t k : e.colonies)
                    if (k != worst_col) col_candidates.push_back(k);
                if (!col_candidates.empty()) {
                    ct = pick_triple(col_candidates, rng_);
                    colony_step = true;
                }
            }
            const bool imperial_step = !imp_candidates.empty();
            Triple it{};
            if (imperial_step) it = pick_triple(imp_candidates, rng_);

            const double n5 = colony_step ? nrp(imp.power, s_.countries[ct.r3].power) : 0.0;
            const double n6 = colony_step ? nrp(s_.countries[ct.r3].power, s_.countries[worst_col].power) : 0.0;
            const double n7 = imperial_step ? nrp(gpow(), s_.countries[it.r3].power) : 0.0;
            const double n8 = imperial_step ? nrp(s_.countries[it.r3].power, s_.countries[worst_imp].power) : 0.0;
            const auto F = fuzzy::adapt_edels(n5, n6, n7, n8, nit).F;

            if (colony_step) {
                const Position& a = s_.countries[ct.r1].position;
                const Position& b = s_.countries[ct.r2].position;
                const Position& c = s_.countries[ct.r3].position;
                const Position& w = s_.countries[worst_col].position;
                Position m{};
                for (std::size_t d = 0; d < kDesignVars; ++d)
                    m[d] = edels_component(a[d], b[d], imp.position[d], c[d], w[d], F[0], F[1], F[2]);
                trial(ct.r3, m, p, t);
            }
            if (imperial_step) {
                const Position& a = s_.countries[it.r1].position;
                const Position& b = s_.countries[it.r2].position;
                const Position& c = s_.countries[it.r3].position;
                const Position& w = s_.countries[worst_imp].position;
                Position m{};
                for (std::size_t d = 0; d < kDesignVars; ++d)
                    m[d] = edels_component(a[d], b[d], s_.global.position[d], c[d], w[d], F[3], F[4], F[5]);
                trial(it.r3, m, p, t);
            }
        }
    }

    void swap_roles() {
        for (Empire& e : s_.empires) {
            for (std::size_t& c : e.colonies) {
                if (s_.countries[c].power > s_.countries[e.imperialist].power) std::swap(c, e.imperialist);
            }
        }
    }

    void step(int t, double nit) {
        moved_.assign(s_.countries.size(), 0);
        fuzzy_inputs(inputs_);
        glva(t, nit, inputs_);
        udvd(t, nit, inputs_);
        evaluate_moved();
        swap_roles();
        edels(t, nit);
        swap_roles();
    }

    const Problem& problem_;
    FaglsudConfig cfg_;
    Rng rng_;
    Evaluator eval_;
    FaglsudState s_;
    std::vector<char> moved_;
    std::vector<std::array<double, 4>> inputs_;
    std::vector<std::size_t> colony_pool_;
    std::vector<std::size_t> imperialist_pool_;
};

} // namespace

RunRecord run_faglsud(const Problem& problem, const FaglsudConfig& config, std::uint64_t seed,
                      const FaglsudObserver& observer) {
    Faglsud f(problem, config, seed);
    RunRecord rec = f.run(observer);
    rec.seed = seed;
    return rec;
}

} // namespace rcwall
