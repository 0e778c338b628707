#include "fitefrac/audit.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "fitefrac/bounds.hpp"
#include "fitefrac/error.hpp"
#include "fitefrac/quadrature.hpp"
#include "fitefrac/rng.hpp"
#include "fitefrac/specfn.hpp"

namespace fitefrac::bounds {

namespace {

enum Ineq : std::size_t {
    kMagnitude,
    kTailKernel,
    kKernelDifference,
    kQIncrement,
    kSubadditive,
    kWeightedIncrement,
    kDUpper,
    kEUpper,
    kCount
};

// Random piecewise-linear function with knots spanning [a, c].
struct PiecewiseLinear {
    std::vector<double> knots;
    std::vector<double> values;

    double operator()(double t) const {
        auto it = std::upper_bound(knots.begin(), knots.end(), t);
        std::size_t k = static_cast<std::size_t>(it - knots.begin());
        k = std::clamp<std::size_t>(k, 1, knots.size() - 1) - 1;
        const double theta = (t - knots[k]) / (knots[k + 1] - knots[k]);
        return (1.0 - theta) * values[k] + theta * values[k + 1];
    }

    double sup_abs() const {
        double s = 0.0;
        for (double v : values) s = std::max(s, std::abs(v));
        return s;
    }
};

PiecewiseLinear random_piecewise(Rng& rng, double a, double c, double amplitude) {
    const int interior = 2 + static_cast<int>(rng.uniform() * 6.0);
    PiecewiseLinear pl;
    pl.knots.push_back(a);
    for (int i = 0; i < interior; ++i) pl.knots.push_back(a + (c - a) * rng.uniform());
    pl.knots.push_back(c);
    std::sort(pl.knots.begin(), pl.knots.end());
    pl.knots.erase(std::unique(pl.knots.begin(), pl.knots.end()), pl.knots.end());
    for (std::size_t i = 0; i < pl.knots.size(); ++i) pl.values.push_back(amplitude * (2.0 * rng.uniform() - 1.0));
    return pl;
}

// (Q_{beta,A} f)(t) with f = W (s - a)^-gamma, integrating the piecewise quadratic
// A W between consecutive knots.
double q_value(double a, double t, double beta, double gamma, const PiecewiseLinear& A,
               const PiecewiseLinear& W) {
    std::vector<double> cuts{a, t};
    for (double k : A.knots) if (k > a && k < t) cuts.push_back(k);
    for (double k : W.knots) if (k > a && k < t) cuts.push_back(k);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    const quad::SingularKernel kernel(a, t, beta, gamma);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        total += kernel.integrate(cuts[i], cuts[i + 1], [&](double s) { return A(s) * W(s); });
    }
    return total;
}

double kernel_integral(double a, double t, double lo, double hi, double beta, double gamma) {
    const quad::SingularKernel kernel(a, t, beta, gamma);
    return kernel.integrate(lo, hi, [](double) { return 1.0; });
}

}  // namespace

const std::vector<std::string>& audited_inequalities() {
    static const std::vector<std::string> names{
        "weighted_magnitude",  "tail_kernel_integral", "kernel_difference", "q_increment",
        "subadditive_power",   "weighted_increment",   "d_upper_bound",     "e_upper_bound"};
    return names;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
    return splitmix64(seed ^ splitmix64(trial + 0x51ED270B27A1F0E5ULL));
}

double general_D(double p, double beta, double gamma, double b_minus_a, double c_minus_a) {
    const double q = p / (p - 1.0);
    const double C = big_C(p, p, beta, gamma);
    const double e = 1.0 - beta - gamma - 1.0 / q;
    const double head = e >= 0.0 ? std::pow(c_minus_a, e)
                                 : std::pow(b_minus_a, e) + std::pow(c_minus_a, e);
    return C * std::pow(c_minus_a, beta) * head +
           std::pow(c_minus_a, 1.0 - beta - gamma) * specfn::beta_fn(1.0 - gamma, 1.0 - beta);
}

AuditReport audit_estimates(const Order& order, double p, int trials, std::uint64_t seed) {
    const HolderParams hp = holder_params(order, p);
    if (trials < 0) throw DomainError("audit_estimates: trials must be non-negative");

    AuditReport report;
    report.alpha = order.alpha();
    report.p = p;
    report.trials = trials;
    report.seed = seed;
    if (trials == 0) return report;

    const auto& names = audited_inequalities();
    report.tallies.resize(kCount);
    for (std::size_t i = 0; i < kCount; ++i) report.tallies[i].name = names[i];

    const double al = order.alpha();
    const double q = hp.q;
    const double gamma_alpha = specfn::gamma_fn(al);
    const double two_pow = std::pow(2.0, 2.0 * (2.0 - al));
    const double b_aa = specfn::beta_fn(al, al);

    for (int trial = 0; trial < trials; ++trial) {
        const std::uint64_t ts = trial_seed(seed, static_cast<std::uint64_t>(trial));
        Rng rng(ts);
        auto check = [&](Ineq which, double lhs, double rhs) {
            InequalityTally& tally = report.tallies[which];
            ++tally.checked;
            const double ratio = rhs > 0.0 ? lhs / rhs : (lhs > 0.0 ? INFINITY : 0.0);
            tally.worst_ratio = std::max(tally.worst_ratio, ratio);
            if (lhs <= rhs * (1.0 + kAuditSlack)) {
                ++tally.passed;
            } else {
                report.failures.push_back(AuditFailure{names[which], trial, ts, lhs, rhs});
            }
        };

        double beta = order.gamma();
        double gamma = order.gamma();
        if (trial % 2 == 1) {
            gamma = 0.02 + rng.uniform() * (std::min(0.98, 0.98 / p) - 0.02);
            const double beta_cap = std::min(1.0 - gamma, 0.98 / p);
            beta = 0.02 + rng.uniform() * (std::max(beta_cap, 0.03) - 0.02);
            beta = std::min(beta, beta_cap);
        }
        const double M = q;  // max(q, w) with w = q

        const double a = -2.0 + 4.0 * rng.uniform();
        const double L = std::pow(10.0, -2.0 + 3.0 * rng.uniform());
        const double c = a + L;
        const double b = a + L * (0.01 + 0.98 * rng.uniform());
        double t1 = b + (c - b) * rng.uniform();
        double t2 = b + (c - b) * rng.uniform();
        if (t1 > t2) std::swap(t1, t2);
        if (!(t2 > t1)) t2 = std::min(c, t1 + 1e-3 * (c - b));

        const PiecewiseLinear W = random_piecewise(rng, a, c, 1.0);
        const PiecewiseLinear A = random_piecewise(rng, a, c, 2.0);
        const double normA = A.sup_abs();
        const double normF = W.sup_abs();
        const double beta_val = specfn::beta_fn(1.0 - gamma, 1.0 - beta);
        const double cc = small_c(p, beta, gamma) + small_c(p, gamma, beta);

        const double Q1 = q_value(a, t1, beta, gamma, A, W);
        const double Q2 = q_value(a, t2, beta, gamma, A, W);

        // |Q f(t)| <= (t-a)^(1-beta-gamma) B(1-gamma, 1-beta) |A| |f|
        for (auto [t, Qt] : {std::pair{t1, Q1}, std::pair{t2, Q2}}) {
            check(kMagnitude, std::abs(Qt),
                  std::pow(t - a, 1.0 - beta - gamma) * beta_val * normA * normF);
        }

        const double ratio_term = std::pow((t2 - t1) / (t2 - a), 1.0 / M);
        const double tail_rhs = std::pow(t2 - a, 1.0 - beta - gamma) * cc * ratio_term;
        check(kTailKernel, kernel_integral(a, t2, t1, t2, beta, gamma), tail_rhs);

        const double diff = kernel_integral(a, t1, a, t1, beta, gamma) -
                            kernel_integral(a, t2, a, t1, beta, gamma);
        check(kKernelDifference, diff, tail_rhs);

        const double C = 2.0 * cc;
        check(kQIncrement, std::abs(Q1 - Q2),
              C * std::pow(t2 - a, 1.0 - beta - gamma - 1.0 / M) * std::pow(t2 - t1, 1.0 / M) * normA *
                  normF);

        {
            const double x = t1 - a;
            const double y = t2 - t1;
            check(kSubadditive, std::pow(x + y, beta), std::pow(x, beta) + std::pow(y, beta));
            const double u = rng.uniform() * 10.0;
            const double v = rng.uniform() * 10.0;
            const double e = rng.uniform();
            check(kSubadditive, std::pow(u + v, e), std::pow(u, e) + std::pow(v, e));
        }

        const double D = general_D(p, beta, gamma, b - a, c - a);
        check(kWeightedIncrement,
              std::abs(std::pow(t1 - a, beta) * Q1 - std::pow(t2 - a, beta) * Q2),
              D * normA * normF * std::max(std::pow(t2 - t1, 1.0 / M), std::pow(t2 - t1, beta)));

        // Theorem regime, independent of the trial exponents.
        const double x = std::pow(L, 1.0 / q);
        const double y = std::pow(L, order.gamma());
        const double Dspec = big_D(order, p, L);
        check(kDUpper, big_C(p, p, order.gamma(), order.gamma()), two_pow);
        check(kDUpper, Dspec, two_pow * std::pow(L, al - 1.0 / q) + b_aa * std::pow(L, 2.0 * al - 1.0));
        check(kDUpper, Dspec, (two_pow + b_aa) * std::pow(L, al) / std::min(x, y));
        check(kEUpper, big_E(order, p, L),
              (two_pow + b_aa) / gamma_alpha * std::pow(L, al) * std::max(x, y) / std::min(x, y));
    }
    return report;
}

}  // namespace fitefrac::bounds
