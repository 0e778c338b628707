#include "fitefrac/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fitefrac/error.hpp"
#include "fitefrac/specfn.hpp"

namespace fitefrac::bounds {

namespace {

constexpr double kClampEps = 1e-6;

void require_positive_length(double length) {
    if (!(length > 0.0) || !std::isfinite(length)) {
        throw DomainError("bounds: interval length must be positive");
    }
}

}  // namespace

HolderParams holder_params(const Order& order, double p) {
    if (!(p > 1.0) || !std::isfinite(p)) {
        throw DomainError("holder_params: p must exceed 1");
    }
    if (!(order.gamma() * p < 0.5)) {
        throw DomainError("holder_params: p = " + std::to_string(p) +
                          " is not admissible, need (1 - alpha) p < 1/2");
    }
    const double q = p / (p - 1.0);
    return HolderParams{p, q, p, q};
}

double max_admissible_p(const Order& order) { return 0.5 / order.gamma(); }

double small_c(double p, double beta, double gamma) {
    if (!(p > 1.0)) throw DomainError("small_c: p must exceed 1");
    if (!(beta > 0.0 && beta < 1.0 && gamma > 0.0 && gamma < 1.0)) {
        throw DomainError("small_c: exponents must lie in (0, 1)");
    }
    if (!(gamma * p < 1.0)) throw DomainError("small_c: need gamma p < 1");
    return std::pow(2.0, beta + gamma - 1.0 / p) / std::pow(1.0 - gamma * p, 1.0 / p);
}

double big_C(double p, double v, double beta, double gamma) {
    return 2.0 * (small_c(p, beta, gamma) + small_c(v, gamma, beta));
}

double big_D(const Order& order, double p, double length) {
    const HolderParams hp = holder_params(order, p);
    require_positive_length(length);
    const double g = order.gamma();
    const double al = order.alpha();
    const double C = big_C(hp.p, hp.v, g, g);
    return C * std::pow(length, al - 1.0 / hp.q) +
           std::pow(length, 2.0 * al - 1.0) * specfn::beta_fn(al, al);
}

double big_E(const Order& order, double p, double length) {
    const HolderParams hp = holder_params(order, p);
    const double D = big_D(order, p, length);
    const double spread = std::max(std::pow(length, 1.0 / hp.q), std::pow(length, order.gamma()));
    return D / specfn::gamma_fn(order.alpha()) * spread;
}

double fite_rhs(const Order& order) {
    const double al = order.alpha();
    return specfn::gamma_fn(al) / (std::pow(2.0, 2.0 * (2.0 - al)) + specfn::beta_fn(al, al));
}

double fite_lhs(const Order& order, double p, double m, double length) {
    const HolderParams hp = holder_params(order, p);
    require_positive_length(length);
    if (!(m >= 0.0) || !std::isfinite(m)) throw DomainError("fite_lhs: m must be non-negative");
    const double x = std::pow(length, 1.0 / hp.q);
    const double y = std::pow(length, order.gamma());
    return m * std::pow(length, order.alpha()) * std::max(x, y) / std::min(x, y);
}

double lhs_short_exponent(const Order& order, double p) {
    const HolderParams hp = holder_params(order, p);
    return order.alpha() - std::abs(1.0 / hp.q - order.gamma());
}

double min_length(const Order& order, double m, double p) {
    if (!(m > 0.0) || !std::isfinite(m)) throw DomainError("min_length: m must be positive");
    holder_params(order, p);
    const double rhs = fite_rhs(order);
    auto excess = [&](double log_len) { return fite_lhs(order, p, m, std::exp(log_len)) - rhs; };

    // fite_lhs equals m at L = 1 and is strictly increasing in L.
    double lo = 0.0, hi = 0.0;
    if (m > rhs) {
        lo = -1.0;
        while (excess(lo) > 0.0) lo *= 2.0;
    } else {
        hi = 1.0;
        while (excess(hi) < 0.0) hi *= 2.0;
    }
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (excess(mid) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return std::exp(0.5 * (lo + hi));
}

std::pair<double, double> best_min_length(const Order& order, double m) {
    double lo = 1.0 + kClampEps;
    double hi = (1.0 - kClampEps) * max_admissible_p(order);
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    auto objective = [&](double p) { return min_length(order, m, p); };

    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = objective(x1);
    double f2 = objective(x2);
    while (hi - lo > 1e-10) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = objective(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = objective(x1);
        }
    }
    // Compare the bracket against the clamped ends, where the supremum may sit.
    double best_p = 0.5 * (lo + hi);
    double best = objective(best_p);
    for (double end : {1.0 + kClampEps, (1.0 - kClampEps) * max_admissible_p(order)}) {
        const double v = objective(end);
        if (v > best) {
            best = v;
            best_p = end;
        }
    }
    return {best_p, best};
}

ConstantChain constant_chain(const Order& order, double p, double length) {
    const HolderParams hp = holder_params(order, p);
    const double g = order.gamma();
    ConstantChain chain{};
    chain.small_c_bg = small_c(hp.p, g, g);
    chain.small_c_gb = small_c(hp.v, g, g);
    chain.big_C = 2.0 * (chain.small_c_bg + chain.small_c_gb);
    chain.big_D = big_D(order, p, length);
    chain.big_E = big_E(order, p, length);
    chain.beta_val = specfn::beta_fn(1.0 - g, 1.0 - g);
    return chain;
}

BoundReport bound_report(const Order& order, double p, double m, double length) {
    BoundReport r{};
    r.alpha = order.alpha();
    r.p_used = p;
    r.m = m;
    r.length = length;
    r.lhs = fite_lhs(order, p, m, length);
    r.rhs = fite_rhs(order);
    r.satisfied = r.lhs >= r.rhs;
    r.min_length = m > 0.0 ? min_length(order, m, p) : std::numeric_limits<double>::infinity();
    return r;
}

}  // namespace fitefrac::bounds
