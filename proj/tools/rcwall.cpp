#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rcwall/harness.hpp"
#include "rcwall/reference.hpp"

using namespace rcwall;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// "3", "1,4,7", "1-9" or "all".
std::vector<int> parse_cases(const std::string& text) {
    if (text == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9};
    std::vector<int> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            const auto dash = part.find('-');
            if (dash == std::string::npos) {
                out.push_back(std::stoi(part));
            } else {
                const int lo = std::stoi(part.substr(0, dash)), hi = std::stoi(part.substr(dash + 1));
                if (lo > hi) throw std::invalid_argument("");
                for (int c = lo; c <= hi; ++c) out.push_back(c);
            }
        } catch (const std::logic_error&) {
            throw std::invalid_argument("bad case list '" + text + "'");
        }
    }
    return out;
}

Example parse_example(int ex) {
    if (ex != 1 && ex != 2) throw std::invalid_argument("example must be 1 or 2");
    return static_cast<Example>(ex);
}

void print_summary(const ExperimentConfig& cfg, const ExperimentResult& res) {
    std::cout << "example " << static_cast<int>(cfg.example) << ", " << to_string(cfg.objective) << ", "
              << to_string(cfg.algorithm) << ", " << cfg.runs << " runs x " << cfg.iterations << " iterations\n";
    std::cout << std::fixed << std::setprecision(2);
    std::cout << std::setw(6) << "case" << std::setw(12) << "mean" << std::setw(12) << "sd" << std::setw(12)
              << "best" << std::setw(12) << "worst" << std::setw(10) << "feasible\n";
    for (const CaseResult& c : res.cases) {
        int feasible = 0;
        for (const RunRecord& r : c.runs) feasible += r.best.feasible;
        std::cout << std::setw(6) << c.seismic_case << std::setw(12) << c.summary.mean << std::setw(12)
                  << c.summary.sd << std::setw(12) << c.summary.best << std::setw(12) << c.summary.worst
                  << std::setw(6) << feasible << '/' << c.runs.size() << '\n';
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Seismic design optimisation of cantilever retaining walls"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "run an optimiser over seismic cases and write CSV results");
    int example = 1;
    std::string cases = "1", objective = "cost", algo = "faglsud", profile, config_file, out = "results";
    int runs = 101, iters = 1000, pop = 50;
    std::uint64_t seed = 42;
    bool serial = false;
    run->add_option("--example", example, "wall example (1 or 2)");
    run->add_option("--case", cases, "seismic cases: 3, 1,4,7, 1-9 or all");
    run->add_option("--objective", objective, "cost, weight or co2");
    run->add_option("--algo", algo, "faglsud, pso or de");
    auto* runs_opt = run->add_option("--runs", runs, "independent runs per case");
    auto* iters_opt = run->add_option("--iters", iters, "iterations per run");
    run->add_option("--pop", pop, "population size");
    run->add_option("--seed", seed, "root seed");
    run->add_option("--out", out, "output directory");
    run->add_option("--profile", profile, "ci (11 x 300) or full (101 x 1000)");
    run->add_option("--config", config_file, "JSON file; its keys override the flags");
    run->add_flag("--serial", serial, "run batches on one thread");

    // stats
    auto* stats = app.add_subcommand("stats", "Friedman ranks and Wilcoxon tests over summary files");
    std::vector<std::string> inputs;
    bool reference = false;
    stats->add_option("summaries", inputs, "summary.csv files, optionally NAME=PATH; the first is the focal one");
    stats->add_flag("--reference", reference, "use the built-in reference example 1 cost means");

    // check
    auto* check = app.add_subcommand("check", "evaluate one design against every limit state");
    int check_example = 1, check_case = 1;
    std::string design_file, design_values;
    check->add_option("--example", check_example, "wall example (1 or 2)");
    check->add_option("--case", check_case, "seismic case 1..9");
    check->add_option("--design", design_file, "file with X1..X8 R1..R4");
    check->add_option("--values", design_values, "X1..X8 R1..R4 inline, comma separated");

    app.add_subcommand("catalog", "print the rebar catalog");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*run) {
            ExperimentConfig cfg;
            cfg.example = parse_example(example);
            cfg.cases = parse_cases(cases);
            cfg.objective = parse_objective(objective);
            cfg.algorithm = parse_algorithm(algo);
            cfg.population = pop;
            cfg.seed = seed;
            cfg.out = out;
            cfg.parallel = !serial;
            if (!profile.empty()) apply_profile(cfg, profile);
            if (runs_opt->count()) cfg.runs = runs;
            else if (profile.empty()) cfg.runs = runs;
            if (iters_opt->count()) cfg.iterations = iters;
            else if (profile.empty()) cfg.iterations = iters;
            if (!config_file.empty()) apply_json(cfg, slurp(config_file));
            const ExperimentResult res = run_experiment(cfg);
            print_summary(cfg, res);
            std::cout << "wrote " << (cfg.out / "convergence.csv").string() << ", designs.csv, summary.csv\n";
        } else if (*stats) {
            std::vector<AlgorithmSummary> summaries;
            if (reference) {
                // FAGLSUD first so the pairwise tables are against it.
                for (std::size_t a = reference::kAlgorithms.size(); a-- > 0;) {
                    AlgorithmSummary s{std::string(reference::kAlgorithms[a]), {}};
                    for (int c = 0; c < 9; ++c) s.means[c + 1] = reference::kExample1CostMeans[a][c];
                    summaries.push_back(std::move(s));
                }
            }
            for (const std::string& in : inputs) {
                const auto eq = in.find('=');
                const std::string path = eq == std::string::npos ? in : in.substr(eq + 1);
                std::string name = eq == std::string::npos ? std::filesystem::path(path).parent_path().filename().string()
                                                           : in.substr(0, eq);
                if (name.empty()) name = path;
                summaries.push_back(read_summary(path, name));
            }
            stats_report(summaries, std::cout);
        } else if (*check) {
            if (design_file.empty() == design_values.empty())
                throw std::invalid_argument("give exactly one of --design or --values");
            const Position p = parse_design(design_file.empty() ? design_values : slurp(design_file));
            if (check_case < 1 || check_case > 9) throw std::invalid_argument("case must be in 1..9");
            check_report(p, parse_example(check_example), check_case, std::cout);
        } else {
            catalog_report(std::cout);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
