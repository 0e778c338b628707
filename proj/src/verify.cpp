#include "fitefrac/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

#include "fitefrac/bounds.hpp"
#include "fitefrac/error.hpp"
#include "fitefrac/rng.hpp"
#include "fitefrac/zeros.hpp"

namespace fitefrac::verify {

namespace {

constexpr double kTrivialNorm = 1e-8;

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::BoundHolds: return "BOUND_HOLDS";
        case Verdict::NoZeroPair: return "NO_ZERO_PAIR";
        case Verdict::Counterexample: return "COUNTEREXAMPLE";
        case Verdict::SolverFailed: return "SOLVER_FAILED";
    }
    return "UNKNOWN";
}

void validate(const Scenario& s) {
    if (!(s.alpha > 0.5 && s.alpha < 1.0)) throw DomainError("alpha: must lie in (1/2, 1)");
    if (!std::isfinite(s.a) || !std::isfinite(s.c) || !(s.a < s.c)) {
        throw DomainError("c: need a < c");
    }
    if (!(s.b > s.a && s.b < s.c)) throw DomainError("b: need a < b < c");
    if (!std::isfinite(s.f_a) || !std::isfinite(s.g_a)) throw DomainError("f_a/g_a: must be finite");
    if (!s.V && s.f_a == 0.0 && s.g_a == 0.0) throw DomainError("f_a/g_a: initial data must be nontrivial");
    if (s.n < 2) throw DomainError("n: need at least 2 cells");
    if (!(s.r >= 1.0)) throw DomainError("r: grading exponent must be >= 1");
    if (!(s.solver.tol > 0.0)) throw DomainError("tol: must be positive");
    if (s.solver.max_iter < 1) throw DomainError("max_iter: must be at least 1");
    if (s.V) {
        if (s.P.kind() != Coefficient::Kind::Constant || !(s.P.constant_value() > 0.0)) {
            throw DomainError("P: relaxation-oscillation scenarios need a constant P > 0");
        }
    } else if (s.P.range(s.a, s.c).second < 0.0) {
        throw DomainError("P: must be non-negative on [a, c]");
    }
}

VerifyReport run_scenario(const Scenario& s, const RunOptions& opts) {
    validate(s);
    VerifyReport rep;
    rep.scenario = s;
    const Order order(s.alpha);
    const GradedGrid grid(s.a, s.c, s.n, s.r);

    rep.p_inf = s.P.sup_abs(s.a, s.c);
    rep.m = std::max(1.0, rep.p_inf);
    const auto [p_star, best_len] = bounds::best_min_length(order, rep.m);
    rep.p_star = p_star;
    rep.min_length = best_len;
    rep.lhs = bounds::fite_lhs(order, p_star, rep.m, s.c - s.a);
    rep.rhs = bounds::fite_rhs(order) * opts.rhs_scale;
    rep.satisfied = rep.lhs >= rep.rhs;

    std::optional<SolveReport> solved;
    try {
        solved = s.V ? solve_relax_osc(s.P.constant_value(), *s.V, order, s.f_a, s.g_a, grid, s.solver)
                     : solve_fite(s.P, order, s.f_a, s.g_a, grid, s.solver);
    } catch (const ConvergenceError& e) {
        rep.verdict = Verdict::SolverFailed;
        rep.failure = e.what();
        return rep;
    }
    rep.residual = solved->residual;
    rep.solve_path = to_string(solved->path);
    rep.f_norm = solved->f.norm_full();
    rep.zero_pair = first_zero_pair(solved->f, solved->g, s.b, s.c);

    if (!rep.zero_pair || rep.f_norm <= kTrivialNorm) {
        rep.verdict = Verdict::NoZeroPair;
    } else if (rep.satisfied) {
        rep.verdict = Verdict::BoundHolds;
    } else {
        rep.verdict = Verdict::Counterexample;
    }
    return rep;
}

std::vector<double> direction_angles(int directions, std::uint64_t seed) {
    std::vector<double> out;
    if (directions <= 0) return out;
    Rng rng(splitmix64(seed));
    for (int k = 0; k < directions; ++k) {
        out.push_back(2.0 * std::numbers::pi * (k + rng.uniform()) / directions);
    }
    return out;
}

std::vector<Scenario> expand(const SweepSpec& spec) {
    std::vector<Scenario> out;
    const std::vector<double> angles = direction_angles(spec.directions, spec.seed);
    for (double alpha : spec.alphas) {
        for (double p_inf : spec.p_infs) {
            for (double length : spec.lengths) {
                for (double theta : angles) {
                    Scenario s;
                    s.alpha = alpha;
                    s.a = spec.a;
                    s.c = spec.a + length;
                    s.b = spec.a + spec.b_fraction * length;
                    s.P = Coefficient::constant(p_inf);
                    s.f_a = std::cos(theta);
                    s.g_a = std::sin(theta);
                    s.n = spec.n;
                    s.r = spec.r;
                    s.solver = spec.solver;
                    out.push_back(std::move(s));
                }
            }
        }
    }
    return out;
}

SweepReport sweep(const SweepSpec& spec, int workers, const RunOptions& opts) {
    const std::vector<Scenario> scenarios = expand(spec);
    std::vector<VerifyReport> records(scenarios.size());

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < scenarios.size(); i = next++) {
            records[i] = run_scenario(scenarios[i], opts);
        }
    };
    const int threads = std::clamp(workers, 1, 64);
    if (threads == 1 || scenarios.size() < 2) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    }

    SweepReport report;
    for (Verdict v : {Verdict::BoundHolds, Verdict::NoZeroPair, Verdict::Counterexample, Verdict::SolverFailed}) {
        report.counts[to_string(v)] = 0;
    }
    for (const auto& rec : records) {
        ++report.counts[to_string(rec.verdict)];
        if (rec.verdict == Verdict::Counterexample) report.counterexamples.push_back(rec);
        if (rec.zero_pair && rec.rhs > 0.0) {
            const double ratio = rec.lhs / rec.rhs;
            report.min_ratio = report.min_ratio ? std::min(*report.min_ratio, ratio) : ratio;
        }
    }
    report.records = std::move(records);
    return report;
}

bool classical_fite_check(double P, double b, double c) {
    if (!(P > 0.0) || !std::isfinite(P)) throw DomainError("classical_fite_check: P must be positive");
    if (!(b < c)) throw DomainError("classical_fite_check: need b < c");
    const double period = std::numbers::pi / std::sqrt(P);
    // zeros of x: k * period, zeros of x': (k + 1/2) * period
    auto has_point = [&](double offset) {
        const double k = std::ceil(b / period - offset);
        return (k + offset) * period <= c;
    };
    const bool pair = has_point(0.0) && has_point(0.5);
    if (!pair) return true;
    return (c - b) * std::max(1.0, P) >= 1.0;
}

}  // namespace fitefrac::verify
