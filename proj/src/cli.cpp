#include "fitefrac/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "fitefrac/audit.hpp"
#include "fitefrac/bounds.hpp"
#include "fitefrac/error.hpp"
#include "fitefrac/sfde.hpp"
#include "fitefrac/verify.hpp"
#include "fitefrac/zeros.hpp"

namespace fitefrac::cli {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

// Config problems carry the offending field in the message.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonFlags {
    std::string config_path;
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> n;
    std::optional<double> grading;
    std::optional<double> p;
    std::string format = "csv";
};

std::string fmt_double(double v, int precision) {
    if (std::isnan(v)) return "NA";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    try {
        return json::parse(in, nullptr, true, true);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: parse error: ") + e.what());
    }
}

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError(std::string(key) + ": wrong type");
    }
}

Coefficient parse_coefficient(const json& j, const char* field, double origin) {
    if (!j.is_object() || j.size() != 1) {
        throw ConfigError(std::string(field) + ": expected one of {\"const\"}, {\"poly\"}, {\"table\"}");
    }
    try {
        if (j.contains("const")) return Coefficient::constant(j.at("const").get<double>());
        if (j.contains("poly")) return Coefficient::polynomial(j.at("poly").get<std::vector<double>>(), origin);
        if (j.contains("table")) {
            std::vector<std::pair<double, double>> pts;
            for (const auto& row : j.at("table")) {
                if (!row.is_array() || row.size() != 2) throw ConfigError(std::string(field) + ": table rows are [t, v]");
                pts.emplace_back(row[0].get<double>(), row[1].get<double>());
            }
            return Coefficient::table(std::move(pts));
        }
    } catch (const json::exception&) {
        throw ConfigError(std::string(field) + ": malformed coefficient");
    } catch (const DomainError& e) {
        throw ConfigError(std::string(field) + ": " + e.what());
    }
    throw ConfigError(std::string(field) + ": unknown coefficient kind");
}

json coefficient_json(const Coefficient& c) {
    switch (c.kind()) {
        case Coefficient::Kind::Constant: return json{{"const", c.constant_value()}};
        case Coefficient::Kind::Polynomial: return json{{"poly", c.poly_coeffs()}};
        case Coefficient::Kind::Table: {
            json rows = json::array();
            for (const auto& [t, v] : c.table_points()) rows.push_back({t, v});
            return json{{"table", rows}};
        }
        case Coefficient::Kind::Callable: return json{{"callable", nullptr}};
    }
    return nullptr;
}

SolveMethod parse_method(const std::string& s) {
    if (s == "auto") return SolveMethod::Auto;
    if (s == "picard") return SolveMethod::Picard;
    if (s == "marching") return SolveMethod::Marching;
    throw ConfigError("solver.method: expected auto, picard or marching");
}

std::string method_name(SolveMethod m) {
    switch (m) {
        case SolveMethod::Auto: return "auto";
        case SolveMethod::Picard: return "picard";
        case SolveMethod::Marching: return "marching";
    }
    return "auto";
}

void read_grid_solver(const json& cfg, const CommonFlags& flags, std::size_t& n, double& r, SolveOptions& solver) {
    const json grid = cfg.contains("grid") ? cfg.at("grid") : json::object();
    const json sol = cfg.contains("solver") ? cfg.at("solver") : json::object();
    n = flags.n.value_or(get_or<std::size_t>(grid, "n", 1024));
    r = flags.grading.value_or(get_or<double>(grid, "r", 2.0));
    solver.tol = get_or<double>(sol, "tol", 1e-10);
    solver.max_iter = get_or<int>(sol, "max_iter", 200);
    solver.method = parse_method(get_or<std::string>(sol, "method", "auto"));
    if (n < 2) throw ConfigError("grid.n: need at least 2 cells");
    if (!(r >= 1.0)) throw ConfigError("grid.r: grading exponent must be >= 1");
    if (!(solver.tol > 0.0)) throw ConfigError("solver.tol: must be positive");
    if (solver.max_iter < 1) throw ConfigError("solver.max_iter: must be at least 1");
}

verify::Scenario parse_scenario(const json& cfg, const CommonFlags& flags) {
    verify::Scenario s;
    s.alpha = get_or<double>(cfg, "alpha", 0.75);
    s.a = get_or<double>(cfg, "a", 0.0);
    if (!cfg.contains("c")) throw ConfigError("c: required");
    s.c = get_or<double>(cfg, "c", 1.0);
    if (!(s.a < s.c)) throw ConfigError("c: need a < c (a=" + std::to_string(s.a) + ", c=" + std::to_string(s.c) + ")");
    s.b = get_or<double>(cfg, "b", s.a + 0.01 * (s.c - s.a));
    s.P = cfg.contains("P") ? parse_coefficient(cfg.at("P"), "P", s.a) : Coefficient::constant(1.0);
    if (cfg.contains("V")) s.V = parse_coefficient(cfg.at("V"), "V", s.a);
    s.f_a = get_or<double>(cfg, "f_a", 0.0);
    s.g_a = get_or<double>(cfg, "g_a", 1.0);
    read_grid_solver(cfg, flags, s.n, s.r, s.solver);
    try {
        verify::validate(s);
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    return s;
}

json scenario_json(const verify::Scenario& s) {
    json j;
    j["alpha"] = s.alpha;
    j["a"] = s.a;
    j["b"] = s.b;
    j["c"] = s.c;
    j["P"] = coefficient_json(s.P);
    j["V"] = s.V ? coefficient_json(*s.V) : json(nullptr);
    j["f_a"] = s.f_a;
    j["g_a"] = s.g_a;
    j["grid"] = {{"n", s.n}, {"r", s.r}};
    j["solver"] = {{"tol", s.solver.tol}, {"max_iter", s.solver.max_iter}, {"method", method_name(s.solver.method)}};
    return j;
}

json report_json(const verify::VerifyReport& r) {
    json j;
    j["scenario"] = scenario_json(r.scenario);
    j["verdict"] = verify::to_string(r.verdict);
    j["p_inf"] = r.p_inf;
    j["m"] = r.m;
    j["residual"] = r.residual;
    j["solve_path"] = r.solve_path;
    if (!r.failure.empty()) j["failure"] = r.failure;
    j["f_norm"] = r.f_norm;
    j["zero_pair"] = r.zero_pair ? json{r.zero_pair->first, r.zero_pair->second} : json(nullptr);
    j["bound"] = {{"p_star", r.p_star}, {"lhs", r.lhs}, {"rhs", r.rhs},
                  {"satisfied", r.satisfied}, {"min_length", r.min_length}};
    return j;
}

void ensure_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw ConfigError("--out: cannot create directory '" + dir + "'");
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("--out: cannot write '" + path.string() + "'");
    out << content;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// Trace columns: t, w_f, f, w_g, g; f and g are not representable at t = a.
std::string trace_csv(const SolveReport& rep, int precision, bool partial) {
    std::ostringstream os;
    if (partial) os << "# partial: solver did not converge\n";
    os << "t,w_f,f,w_g,g\n";
    const GradedGrid& grid = rep.f.grid();
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const double t = grid.node(j);
        const double f = j == 0 ? NAN : rep.f.eval_raw(t);
        const double g = j == 0 ? NAN : rep.g.eval_raw(t);
        os << fmt_double(t, precision) << ',' << fmt_double(rep.f.reg(j), precision) << ','
           << fmt_double(f, precision) << ',' << fmt_double(rep.g.reg(j), precision) << ','
           << fmt_double(g, precision) << '\n';
    }
    return os.str();
}

json trace_json(const SolveReport& rep, bool partial) {
    json rows = json::array();
    const GradedGrid& grid = rep.f.grid();
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const double t = grid.node(j);
        rows.push_back({t, rep.f.reg(j), j == 0 ? json(nullptr) : json(rep.f.eval_raw(t)), rep.g.reg(j),
                        j == 0 ? json(nullptr) : json(rep.g.eval_raw(t))});
    }
    return json{{"partial", partial}, {"columns", {"t", "w_f", "f", "w_g", "g"}}, {"rows", rows}};
}

int cmd_solve(const CommonFlags& flags, std::ostream& out) {
    if (flags.config_path.empty()) throw ConfigError("--config: required");
    const json cfg = read_json(flags.config_path);
    const verify::Scenario s = parse_scenario(cfg, flags);
    const int precision = get_or<int>(cfg.contains("output") ? cfg.at("output") : json::object(), "precision", 17);
    if (flags.format != "csv" && flags.format != "json") throw ConfigError("--format: expected csv or json");
    ensure_dir(flags.out_dir);

    const Order order(s.alpha);
    const GradedGrid grid(s.a, s.c, s.n, s.r);
    std::optional<SolveReport> rep;
    std::string failure;
    try {
        rep = s.V ? solve_relax_osc(s.P.constant_value(), *s.V, order, s.f_a, s.g_a, grid, s.solver)
                  : solve_fite(s.P, order, s.f_a, s.g_a, grid, s.solver);
    } catch (const SolveFailure& e) {
        rep = e.partial();
        failure = e.what();
    }
    const bool partial = !failure.empty();

    json resolved = scenario_json(s);
    resolved["output"] = {{"precision", precision}, {"format", flags.format}};
    json summary;
    summary["config"] = resolved;
    summary["converged"] = !partial;
    summary["partial"] = partial;
    if (partial) summary["failure"] = failure;
    summary["path"] = to_string(rep->path);
    summary["iterations"] = rep->iterations;
    summary["residual"] = std::isfinite(rep->residual) ? json(rep->residual) : json(nullptr);
    summary["increments"] = rep->increments;
    summary["f_norm"] = rep->f.norm_full();
    summary["g_norm"] = rep->g.norm_full();
    const ZeroSet zs = locate_zeros(rep->f, rep->g, s.b, s.c);
    summary["zeros"] = {{"window", {s.b, s.c}}, {"f", zs.zeros_f}, {"g", zs.zeros_g}};

    const fs::path dir(flags.out_dir);
    if (flags.format == "csv") {
        write_file(dir / "trace.csv", trace_csv(*rep, precision, partial));
    } else {
        write_file(dir / "trace.json", dump(trace_json(*rep, partial)));
    }
    write_file(dir / "summary.json", dump(summary));
    out << (partial ? "solve: FAILED (" + failure + ")" : "solve: ok") << " path=" << to_string(rep->path)
        << " iterations=" << rep->iterations << " residual=" << fmt_double(rep->residual, 6) << '\n';
    return partial ? kSolverFailure : kOk;
}

int cmd_bound(double alpha, double m, const CommonFlags& flags, bool write_out, std::ostream& out) {
    if (!(alpha > 0.5 && alpha < 1.0)) throw ConfigError("--alpha: must lie in (1/2, 1)");
    if (!(m > 0.0) || !std::isfinite(m)) throw ConfigError("--m: must be positive");
    const Order order(alpha);
    json rec;
    rec["alpha"] = alpha;
    rec["m"] = m;
    rec["rhs"] = bounds::fite_rhs(order);
    double p = 0.0;
    if (flags.p) {
        p = *flags.p;
        try {
            bounds::holder_params(order, p);
        } catch (const DomainError& e) {
            throw ConfigError(std::string("--p: ") + e.what());
        }
        rec["p_source"] = "given";
        rec["p"] = p;
        rec["min_length"] = bounds::min_length(order, m, p);
    } else {
        const auto [p_star, len] = bounds::best_min_length(order, m);
        p = p_star;
        rec["p_source"] = "optimized";
        rec["p"] = p_star;
        rec["min_length"] = len;
    }
    const auto hp = bounds::holder_params(order, p);
    rec["q"] = hp.q;
    rec["lhs_short_exponent"] = bounds::lhs_short_exponent(order, p);
    rec["big_C"] = bounds::big_C(p, p, order.gamma(), order.gamma());
    const std::string text = dump(rec);
    out << text;
    if (write_out) {
        ensure_dir(flags.out_dir);
        write_file(fs::path(flags.out_dir) / "bound.json", text);
    }
    return kOk;
}

verify::SweepSpec parse_sweep(const json& cfg, const CommonFlags& flags) {
    const json& sw = cfg.at("sweep");
    verify::SweepSpec spec;
    spec.alphas = get_or<std::vector<double>>(sw, "alpha", {});
    spec.p_infs = get_or<std::vector<double>>(sw, "p_inf", {});
    spec.lengths = get_or<std::vector<double>>(sw, "lengths", {});
    spec.directions = get_or<int>(sw, "directions", 8);
    spec.seed = flags.seed.value_or(get_or<std::uint64_t>(sw, "seed", 42));
    spec.a = get_or<double>(sw, "a", 0.0);
    spec.b_fraction = get_or<double>(sw, "b_fraction", 0.01);
    read_grid_solver(cfg, flags, spec.n, spec.r, spec.solver);
    for (double al : spec.alphas) {
        if (!(al > 0.5 && al < 1.0)) throw ConfigError("sweep.alpha: values must lie in (1/2, 1)");
    }
    for (double p : spec.p_infs) {
        if (!(p >= 0.0) || !std::isfinite(p)) throw ConfigError("sweep.p_inf: values must be non-negative");
    }
    for (double l : spec.lengths) {
        if (!(l > 0.0) || !std::isfinite(l)) throw ConfigError("sweep.lengths: values must be positive");
    }
    if (spec.directions < 0) throw ConfigError("sweep.directions: must be non-negative");
    if (!(spec.b_fraction > 0.0 && spec.b_fraction < 1.0)) throw ConfigError("sweep.b_fraction: must lie in (0, 1)");
    return spec;
}

json sweep_spec_json(const verify::SweepSpec& s) {
    return json{{"sweep",
                 {{"alpha", s.alphas}, {"p_inf", s.p_infs}, {"lengths", s.lengths}, {"directions", s.directions},
                  {"seed", s.seed}, {"a", s.a}, {"b_fraction", s.b_fraction}}},
                {"grid", {{"n", s.n}, {"r", s.r}}},
                {"solver", {{"tol", s.solver.tol}, {"max_iter", s.solver.max_iter}, {"method", method_name(s.solver.method)}}}};
}

int cmd_verify(const CommonFlags& flags, int jobs, double rhs_scale, std::ostream& out) {
    if (flags.config_path.empty()) throw ConfigError("--config: required");
    if (jobs < 1) throw ConfigError("--jobs: must be at least 1");
    const json cfg = read_json(flags.config_path);
    const verify::RunOptions run_opts{rhs_scale};

    json report;
    verify::SweepReport agg;
    if (cfg.contains("sweep")) {
        const verify::SweepSpec spec = parse_sweep(cfg, flags);
        const int workers = jobs > 1 ? jobs : get_or<int>(cfg.at("sweep"), "workers", 1);
        agg = verify::sweep(spec, workers, run_opts);
        report["config"] = sweep_spec_json(spec);
    } else {
        const verify::Scenario s = parse_scenario(cfg, flags);
        verify::VerifyReport rec = verify::run_scenario(s, run_opts);
        for (auto v : {verify::Verdict::BoundHolds, verify::Verdict::NoZeroPair, verify::Verdict::Counterexample,
                       verify::Verdict::SolverFailed}) {
            agg.counts[verify::to_string(v)] = 0;
        }
        ++agg.counts[verify::to_string(rec.verdict)];
        if (rec.verdict == verify::Verdict::Counterexample) agg.counterexamples.push_back(rec);
        if (rec.zero_pair) agg.min_ratio = rec.lhs / rec.rhs;
        agg.records.push_back(std::move(rec));
        report["config"] = scenario_json(s);
    }
    if (rhs_scale != 1.0) report["config"]["test_rhs_scale"] = rhs_scale;

    json counts = json::object();
    for (const auto& [k, v] : agg.counts) counts[k] = v;
    report["scenarios"] = agg.records.size();
    report["counts"] = counts;
    report["min_lhs_rhs_ratio"] = agg.min_ratio ? json(*agg.min_ratio) : json(nullptr);
    json cex = json::array();
    for (const auto& r : agg.counterexamples) cex.push_back(report_json(r));
    report["counterexamples"] = cex;
    json recs = json::array();
    for (const auto& r : agg.records) recs.push_back(report_json(r));
    report["records"] = recs;

    ensure_dir(flags.out_dir);
    write_file(fs::path(flags.out_dir) / "verify_report.json", dump(report));
    out << "verify: " << agg.records.size() << " scenarios";
    for (const auto& [k, v] : agg.counts) out << ' ' << k << '=' << v;
    out << '\n';
    return agg.counterexamples.empty() ? kOk : kVerificationFailure;
}

int cmd_audit(double alpha, int trials, const CommonFlags& flags, bool write_out, std::ostream& out) {
    if (!(alpha > 0.5 && alpha < 1.0)) throw ConfigError("--alpha: must lie in (1/2, 1)");
    if (!flags.p) throw ConfigError("--p: required");
    if (trials < 0) throw ConfigError("--trials: must be non-negative");
    const Order order(alpha);
    try {
        bounds::holder_params(order, *flags.p);
    } catch (const DomainError& e) {
        throw ConfigError(std::string("--p: ") + e.what());
    }
    const std::uint64_t seed = flags.seed.value_or(42);
    const bounds::AuditReport rep = bounds::audit_estimates(order, *flags.p, trials, seed);

    json j;
    j["config"] = {{"alpha", alpha}, {"p", *flags.p}, {"trials", trials}, {"seed", seed}, {"slack", bounds::kAuditSlack}};
    json tallies = json::array();
    for (const auto& t : rep.tallies) {
        tallies.push_back({{"inequality", t.name}, {"checked", t.checked}, {"passed", t.passed}, {"worst_ratio", t.worst_ratio}});
        out << t.name << ": " << t.passed << '/' << t.checked << " passed (worst lhs/rhs "
            << fmt_double(t.worst_ratio, 6) << ")\n";
    }
    j["counts"] = tallies;
    json fails = json::array();
    for (const auto& f : rep.failures) {
        fails.push_back({{"inequality", f.inequality}, {"trial", f.trial}, {"trial_seed", f.trial_seed},
                         {"lhs", f.lhs}, {"rhs", f.rhs}});
        out << "FAILED " << f.inequality << " trial " << f.trial << " seed " << f.trial_seed << '\n';
    }
    j["failures"] = fails;
    j["all_passed"] = rep.all_passed();
    if (write_out) {
        ensure_dir(flags.out_dir);
        write_file(fs::path(flags.out_dir) / "audit_report.json", dump(j));
    }
    out << "audit: " << (rep.all_passed() ? "all passed" : "FAILURES") << '\n';
    return rep.all_passed() ? kOk : kVerificationFailure;
}

int cmd_zeros(const std::string& trace_path, std::optional<double> b, std::optional<double> c,
              const CommonFlags& flags, bool write_out, std::ostream& out) {
    std::ifstream in(trace_path);
    if (!in) throw ConfigError("--trace: cannot open '" + trace_path + "'");
    std::vector<double> t, wf, wg;
    std::string line;
    bool header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header) {
            if (line.rfind("t,w_f,f,w_g,g", 0) != 0) throw ConfigError("--trace: unexpected header");
            header = true;
            continue;
        }
        std::stringstream ss(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (cells.size() != 5) throw ConfigError("--trace: rows need 5 columns");
        try {
            t.push_back(std::stod(cells[0]));
            wf.push_back(std::stod(cells[1]));
            wg.push_back(std::stod(cells[3]));
        } catch (const std::exception&) {
            throw ConfigError("--trace: malformed number");
        }
    }
    if (t.size() < 3) throw ConfigError("--trace: need at least three rows");
    const double lo = b.value_or(t[1]);
    const double hi = c.value_or(t.back());
    const double tol = 1e-12 * (t.back() - t.front());
    std::vector<double> zf, zg;
    try {
        zf = find_zeros_sampled(t, wf, lo, hi, tol);
        zg = find_zeros_sampled(t, wg, lo, hi, tol);
    } catch (const DomainError& e) {
        throw ConfigError(std::string("--b/--c: ") + e.what());
    }
    json j{{"trace", trace_path}, {"window", {lo, hi}}, {"zeros_f", zf}, {"zeros_g", zg}};
    const std::string text = dump(j);
    out << text;
    if (write_out) {
        ensure_dir(flags.out_dir);
        write_file(fs::path(flags.out_dir) / "zeros.json", text);
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fite-type disconjugacy toolkit for sequential fractional equations"};
    app.require_subcommand(1);

    CommonFlags flags;
    double alpha = 0.75;
    double m = 1.0;
    int trials = 1000;
    int jobs = 1;
    double rhs_scale = 1.0;
    std::string trace_path;
    std::optional<double> win_b, win_c;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", flags.out_dir, "Output directory");
        sub->add_option("--seed", flags.seed, "Random seed");
    };
    auto add_grid = [&](CLI::App* sub) {
        sub->add_option("--config", flags.config_path, "JSON config file");
        sub->add_option("--n", flags.n, "Number of grid cells");
        sub->add_option("--grading", flags.grading, "Grid grading exponent r");
    };

    auto* solve = app.add_subcommand("solve", "Solve one scenario and write its trace");
    add_common(solve);
    add_grid(solve);
    solve->add_option("--format", flags.format, "Trace format")->check(CLI::IsMember({"csv", "json"}));

    auto* bound = app.add_subcommand("bound", "Print the theorem bound and minimal length");
    add_common(bound);
    bound->add_option("--alpha", alpha, "Fractional order")->required();
    bound->add_option("--m", m, "Coefficient bound m")->required();
    bound->add_option("--p", flags.p, "Hölder exponent (optimized when omitted)");

    auto* verify_cmd = app.add_subcommand("verify", "Run a scenario or sweep against the theorem");
    add_common(verify_cmd);
    add_grid(verify_cmd);
    verify_cmd->add_option("--jobs", jobs, "Worker threads for sweeps");
    verify_cmd->add_option("--test-rhs-scale", rhs_scale, "Scale the theorem rhs (negative-path testing)")
        ->group("");

    auto* audit = app.add_subcommand("audit", "Randomized audit of the supporting estimates");
    add_common(audit);
    audit->add_option("--alpha", alpha, "Fractional order")->required();
    audit->add_option("--p", flags.p, "Hölder exponent")->required();
    audit->add_option("--trials", trials, "Number of random trials");

    auto* zeros = app.add_subcommand("zeros", "Locate zeros in a stored solution trace");
    add_common(zeros);
    zeros->add_option("--trace", trace_path, "Trace CSV written by solve")->required();
    zeros->add_option("--b", win_b, "Window start");
    zeros->add_option("--c", win_c, "Window end");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();  // program name
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    }

    try {
        if (*solve) return cmd_solve(flags, out);
        if (*bound) return cmd_bound(alpha, m, flags, bound->count("--out") > 0, out);
        if (*verify_cmd) return cmd_verify(flags, jobs, rhs_scale, out);
        if (*audit) return cmd_audit(alpha, trials, flags, audit->count("--out") > 0, out);
        if (*zeros) return cmd_zeros(trace_path, win_b, win_c, flags, zeros->count("--out") > 0, out);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kConfigError;
    } catch (const ConvergenceError& e) {
        err << "solver failure: " << e.what() << '\n';
        return kSolverFailure;
    }
    return kConfigError;
}

int run(int argc, char** argv) { return run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr); }

}  // namespace fitefrac::cli
