#include "rcwall/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "rcwall/limit_states.hpp"
#include "rcwall/problem.hpp"
#include "rcwall/rng.hpp"

namespace rcwall {

void ExperimentConfig::validate() const {
    if (cases.empty()) throw std::invalid_argument("at least one seismic case is required");
    for (int c : cases)
        if (c < 1 || c > 9) throw std::invalid_argument("seismic case " + std::to_string(c) + " is not in 1..9");
    if (runs < 1) throw std::invalid_argument("runs must be at least 1");
    if (population < 2) throw std::invalid_argument("population must be at least 2");
    if (iterations < 1) throw std::invalid_argument("iterations must be at least 1");
    if (parameters) parameters->validate();
}

void apply_profile(ExperimentConfig& config, std::string_view profile) {
    if (profile == "ci") {
        config.runs = 11;
        config.iterations = 300;
    } else if (profile == "full") {
        config.runs = 101;
        config.iterations = 1000;
    } else {
        throw std::invalid_argument("unknown profile '" + std::string(profile) + "' (ci|full)");
    }
}

namespace {

template <class T>
T get_checked(const nlohmann::json& j, const char* key) {
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw std::invalid_argument(std::string("config: bad value for '") + key + "'");
    }
}

} // namespace

void apply_json(ExperimentConfig& config, std::string_view json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("config: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("config: expected a JSON object");

    static const char* known[] = {"example", "cases", "objective", "algo", "runs", "iters",
                                  "pop",     "seed",  "out",       "profile", "parallel", "parameters"};
    for (const auto& item : j.items())
        if (std::find_if(std::begin(known), std::end(known), [&](const char* k) { return item.key() == k; }) ==
            std::end(known))
            throw std::invalid_argument("config: unknown key '" + item.key() + "'");

    if (j.contains("example")) {
        const int ex = get_checked<int>(j, "example");
        if (ex != 1 && ex != 2) throw std::invalid_argument("config: example must be 1 or 2");
        config.example = static_cast<Example>(ex);
    }
    if (j.contains("cases")) {
        const auto& c = j.at("cases");
        if (c.is_number_integer()) config.cases = {c.get<int>()};
        else config.cases = get_checked<std::vector<int>>(j, "cases");
    }
    if (j.contains("objective")) config.objective = parse_objective(get_checked<std::string>(j, "objective"));
    if (j.contains("algo")) config.algorithm = parse_algorithm(get_checked<std::string>(j, "algo"));
    if (j.contains("profile")) apply_profile(config, get_checked<std::string>(j, "profile"));
    if (j.contains("runs")) config.runs = get_checked<int>(j, "runs");
    if (j.contains("iters")) config.iterations = get_checked<int>(j, "iters");
    if (j.contains("pop")) config.population = get_checked<int>(j, "pop");
    if (j.contains("seed")) config.seed = get_checked<std::uint64_t>(j, "seed");
    if (j.contains("out")) config.out = get_checked<std::string>(j, "out");
    if (j.contains("parallel")) config.parallel = get_checked<bool>(j, "parallel");
    if (j.contains("parameters")) {
        if (!j.at("parameters").is_object()) throw std::invalid_argument("config: 'parameters' must be an object");
        config.parameters = parameters_from_json(j.at("parameters").dump(), preset_parameters(config.example));
    }
}

Problem make_problem(const ExperimentConfig& config, int seismic_case) {
    Problem pr = Problem::make(config.example, seismic_case, config.objective);
    if (config.parameters) pr.params = *config.parameters;
    return pr;
}

ExperimentResult run_batches(const ExperimentConfig& config) {
    config.validate();
    ExperimentResult result;
    for (int c : config.cases) {
        const Problem problem = make_problem(config, c);
        BatchConfig batch;
        batch.algorithm = config.algorithm;
        batch.runs = config.runs;
        batch.iterations = config.iterations;
        batch.population = config.population;
        batch.root_seed = stream_seed(config.seed, static_cast<std::uint64_t>(c) << 32);

        CaseResult cr;
        cr.seismic_case = c;
        cr.runs = config.parallel ? run_batch_parallel(problem, batch) : run_batch_serial(problem, batch);
        std::vector<double> finals;
        finals.reserve(cr.runs.size());
        for (const RunRecord& r : cr.runs) finals.push_back(r.best.penalized);
        cr.summary = summarize(finals);
        result.cases.push_back(std::move(cr));
    }
    return result;
}

std::string format_number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

namespace {

std::ofstream open_csv(const std::filesystem::path& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    return f;
}

} // namespace

void write_results(const std::filesystem::path& dir, const ExperimentResult& result) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create output directory " + dir.string() + ": " + ec.message());

    std::ofstream conv = open_csv(dir / "convergence.csv");
    std::ofstream designs = open_csv(dir / "designs.csv");
    std::ofstream summary = open_csv(dir / "summary.csv");

    conv << "case,run_id,iteration,best_penalized,best_raw\n";
    designs << "case,run_id";
    for (int k = 1; k <= 8; ++k) designs << ",X" << k;
    for (int k = 1; k <= 4; ++k) designs << ",R" << k;
    designs << ",objective,feasible\n";
    summary << "case,mean,sd,best,worst\n";

    for (const CaseResult& cr : result.cases) {
        for (std::size_t r = 0; r < cr.runs.size(); ++r) {
            const RunRecord& run = cr.runs[r];
            const std::size_t id = r + 1;
            for (std::size_t t = 0; t < run.best_penalized.size(); ++t)
                conv << cr.seismic_case << ',' << id << ',' << t + 1 << ',' << format_number(run.best_penalized[t])
                     << ',' << format_number(run.best_raw[t]) << '\n';

            const DesignVector d = DesignVector::from_position(run.best_position);
            designs << cr.seismic_case << ',' << id;
            for (double x : d.x) designs << ',' << format_number(x);
            for (int idx : d.r) designs << ',' << idx;
            designs << ',' << format_number(run.best.raw) << ',' << (run.best.feasible ? 1 : 0) << '\n';
        }
        summary << cr.seismic_case << ',' << format_number(cr.summary.mean) << ',' << format_number(cr.summary.sd)
                << ',' << format_number(cr.summary.best) << ',' << format_number(cr.summary.worst) << '\n';
    }
    if (!conv || !designs || !summary) throw std::runtime_error("write failed in " + dir.string());
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    ExperimentResult result = run_batches(config);
    write_results(config.out, result);
    return result;
}

AlgorithmSummary read_summary(const std::filesystem::path& path, std::string name) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot read " + path.string());
    AlgorithmSummary s{std::move(name), {}};
    std::string line;
    std::getline(f, line);
    if (line.rfind("case,mean", 0) != 0) throw std::runtime_error(path.string() + ": not a summary file");
    int lineno = 1;
    while (std::getline(f, line)) {
        ++lineno;
        if (line.empty()) continue;
        int c = 0;
        double mean = 0;
        if (std::sscanf(line.c_str(), "%d,%lf", &c, &mean) != 2)
            throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": malformed row");
        s.means[c] = mean;
    }
    if (s.means.empty()) throw std::runtime_error(path.string() + ": no rows");
    return s;
}

void stats_report(std::span<const AlgorithmSummary> summaries, std::ostream& os) {
    if (summaries.size() < 2) throw std::invalid_argument("stats needs at least two summaries");
    std::vector<int> cases;
    for (const auto& [c, m] : summaries.front().means) cases.push_back(c);
    for (const AlgorithmSummary& s : summaries) {
        std::vector<int> other;
        for (const auto& [c, m] : s.means) other.push_back(c);
        if (other != cases)
            throw std::invalid_argument("summary '" + s.name + "' covers different cases than '" +
                                        summaries.front().name + "'");
    }

    std::vector<std::vector<double>> matrix;
    for (const AlgorithmSummary& s : summaries) {
        std::vector<double> row;
        for (int c : cases) row.push_back(s.means.at(c));
        matrix.push_back(std::move(row));
    }
    const FriedmanResult fr = friedman_ranks(matrix);

    const auto saved_flags = os.flags();
    const auto saved_precision = os.precision();
    os << std::fixed << std::setprecision(2);

    os << "Friedman ranks\n" << std::setw(14) << "case";
    for (const AlgorithmSummary& s : summaries) os << std::setw(18) << s.name;
    os << '\n';
    for (std::size_t k = 0; k < cases.size(); ++k) {
        os << std::setw(14) << cases[k];
        for (std::size_t a = 0; a < summaries.size(); ++a) {
            std::ostringstream cell;
            cell << std::fixed << std::setprecision(2) << matrix[a][k] << " (" << fr.ranks[k][a] << ")";
            os << std::setw(18) << cell.str();
        }
        os << '\n';
    }
    os << std::setw(14) << "average rank";
    for (double r : fr.average) os << std::setw(18) << r;
    os << '\n' << std::setw(14) << "overall rank";
    for (double r : fr.overall) os << std::setw(18) << r;
    os << "\n";

    const AlgorithmSummary& focal = summaries.front();
    for (std::size_t a = 1; a < summaries.size(); ++a) {
        const WilcoxonResult w = wilcoxon_signed_rank(matrix[0], matrix[a]);
        os << "\nWilcoxon signed-rank: " << focal.name << " vs " << summaries[a].name << '\n';
        os << std::setw(6) << "case" << std::setw(14) << focal.name << std::setw(14) << summaries[a].name
           << std::setw(14) << "difference" << std::setw(8) << "rank" << std::setw(6) << "sign" << '\n';
        for (std::size_t k = 0; k < cases.size(); ++k) {
            const double diff = w.differences[k];
            const char* sign = w.ranks[k] == 0 ? "0" : (diff > 0 ? "+" : "-");
            os << std::setw(6) << cases[k] << std::setw(14) << matrix[0][k] << std::setw(14) << matrix[a][k]
               << std::setw(14) << diff << std::setw(8) << w.ranks[k] << std::setw(6) << sign << '\n';
        }
        os << "T- = " << w.t_minus << ", T+ = " << w.t_plus << ", W_stat = " << w.w_stat;
        if (w.w_critical) os << ", W_crit = " << *w.w_critical;
        os << ", n = " << w.n << '\n';
        if (w.undefined) os << "verdict: undefined (all differences are zero)\n";
        else if (!w.w_critical) os << "verdict: not significant (n outside the critical-value table)\n";
        else os << "verdict: " << (w.significant ? "significant" : "not significant") << " at alpha = 0.05\n";
    }
    os.flags(saved_flags);
    os.precision(saved_precision);
}

Position parse_design(std::string_view text) {
    std::string s(text);
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream in(s);
    Position p{};
    std::size_t n = 0;
    std::string tok;
    while (in >> tok) {
        if (n == kDesignVars) throw std::invalid_argument("design: more than 12 values");
        double v = 0;
        const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
            throw std::invalid_argument("design: cannot parse '" + tok + "'");
        p[n++] = v;
    }
    if (n != kDesignVars) throw std::invalid_argument("design: expected 12 values, got " + std::to_string(n));
    return p;
}

void check_report(const Position& design, Example example, int case_number, std::ostream& os,
                  const std::optional<DesignParameters>& parameters) {
    const DesignParameters params = parameters ? *parameters : preset_parameters(example);
    const SeismicCase sc = seismic_case(case_number);
    const Bounds b = bounds_for(example);
    const DesignVector d = DesignVector::from_position(design);

    const auto saved_flags = os.flags();
    const auto saved_precision = os.precision();
    os << std::setprecision(6);

    os << "example " << static_cast<int>(example) << ", case " << case_number << " (kh = " << sc.kh
       << ", kv = " << sc.kv << ")\n";
    for (std::size_t k = 0; k < kDesignVars; ++k)
        if (design[k] < b.lower[k] || design[k] > b.upper[k])
            os << "warning: " << (k < kGeometryVars ? "X" + std::to_string(k + 1) : "R" + std::to_string(k - 7))
               << " = " << design[k] << " outside [" << b.lower[k] << ", " << b.upper[k] << "]\n";
    for (std::size_t k = 0; k < kRebarVars; ++k) {
        const RebarChoice& rc = lookup(d.r[k]);
        os << "R" << k + 1 << " -> index " << d.r[k] << ": " << rc.count << " x " << rc.diameter_mm << " mm, "
           << rc.area_cm2 << " cm2\n";
    }

    const WallAnalysis a = analyze(d, params, sc);
    if (!a.pressure_valid) os << "warning: seismic earth pressure undefined for this case\n";
    for (std::size_t k = 0; k < kConstraintCount; ++k)
        os << "g" << k + 1 << " = " << a.constraints.g[k] << (a.constraints.g[k] > 0 ? "  (violated)" : "") << '\n';
    os << "FS_overturning = " << a.stability.fs_overturning << '\n'
       << "FS_sliding = " << a.stability.fs_sliding << '\n'
       << "FS_bearing = " << a.stability.fs_bearing << '\n'
       << "q_max = " << a.stability.q_max << " kPa\n"
       << "q_min = " << a.stability.q_min << " kPa\n";

    os << std::fixed << std::setprecision(2);
    for (ObjectiveKind k : {ObjectiveKind::Cost, ObjectiveKind::Weight, ObjectiveKind::Co2})
        os << to_string(k) << " = " << evaluate_objective(d, params, k).value << '\n';
    os << "feasible = " << (a.constraints.feasible() ? "yes" : "no") << '\n';
    os.flags(saved_flags);
    os.precision(saved_precision);
}

void catalog_report(std::ostream& os) {
    const auto saved_flags = os.flags();
    const auto saved_precision = os.precision();
    os << "index,bars,diameter_mm,area_cm2\n" << std::fixed << std::setprecision(3);
    int i = 1;
    for (const RebarChoice& c : catalog()) os << i++ << ',' << c.count << ',' << c.diameter_mm << ',' << c.area_cm2 << '\n';
    os.flags(saved_flags);
    os.precision(saved_precision);
}

} // namespace rcwall
