// Serial vs OpenMP batch timing on example 1, case 1, cost.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "rcwall/batch.hpp"

using namespace rcwall;

namespace {

bool same(const std::vector<RunRecord>& a, const std::vector<RunRecord>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].best_penalized != b[i].best_penalized || a[i].best_position != b[i].best_position) return false;
    return true;
}

template <class F>
double seconds(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    BatchConfig cfg;
    cfg.runs = argc > 1 ? std::atoi(argv[1]) : 8;
    cfg.iterations = argc > 2 ? std::atoi(argv[2]) : 300;
    const Problem prob = Problem::make(Example::One, 1, ObjectiveKind::Cost);
    std::printf("threads: %d, runs: %d, iterations: %d\n", batch_threads(), cfg.runs, cfg.iterations);
    bool ok = true;
    for (Algorithm algo : {Algorithm::Faglsud, Algorithm::Pso, Algorithm::De}) {
        cfg.algorithm = algo;
        std::vector<RunRecord> serial, parallel;
        const double ts = seconds([&] { serial = run_batch_serial(prob, cfg); });
        const double tp = seconds([&] { parallel = run_batch_parallel(prob, cfg); });
        const bool eq = same(serial, parallel);
        ok &= eq;
        std::printf("%-8s serial %8.3f s  parallel %8.3f s  speedup %5.2f  %s\n", to_string(algo).c_str(), ts, tp,
                    ts / tp, eq ? "identical" : "MISMATCH");
    }
    return ok ? 0 : 1;
}
