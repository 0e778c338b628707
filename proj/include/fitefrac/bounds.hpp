#pragma once

#include <utility>

#include "fitefrac/weighted.hpp"

namespace fitefrac::bounds {

/// Hölder exponents with 1/p + 1/q = 1 and 1/v + 1/w = 1.
struct HolderParams {
    double p, q, v, w;
};

/// p = v, q = w = p/(p-1). Requires p > 1 and (1 - alpha) p < 1/2.
HolderParams holder_params(const Order& order, double p);

/// Upper end of the admissible open interval of p for this order.
double max_admissible_p(const Order& order);

/// c(p, beta, gamma) = 2^(beta + gamma - 1/p) / (1 - gamma p)^(1/p); needs gamma p < 1.
double small_c(double p, double beta, double gamma);

/// C = 2 (c(p, beta, gamma) + c(v, gamma, beta)).
double big_C(double p, double v, double beta, double gamma);

/// D for beta = gamma = 1 - alpha and p = v:
///   C L^(alpha - 1/q) + L^(2 alpha - 1) B(alpha, alpha),  L = c - a.
/// It does not depend on the left end b of the window.
double big_D(const Order& order, double p, double length);

/// E = D / Gamma(alpha) * max(L^(1/q), L^(1 - alpha)).
double big_E(const Order& order, double p, double length);

/// Gamma(alpha) / (2^(2(2 - alpha)) + B(alpha, alpha)).
double fite_rhs(const Order& order);

/// m L^alpha max(L^(1/q), L^(1-alpha)) / min(L^(1/q), L^(1-alpha)).
double fite_lhs(const Order& order, double p, double m, double length);

/// Exponent of L in fite_lhs on L <= 1: alpha - |1/q - (1 - alpha)|.
double lhs_short_exponent(const Order& order, double p);

/// The length at which fite_lhs reaches fite_rhs (bisection in log L).
double min_length(const Order& order, double m, double p);

/// Maximizes min_length over admissible p by golden-section search on
/// [1 + eps, (1 - eps) / (2 (1 - alpha))], eps = 1e-6. Returns (p*, length).
std::pair<double, double> best_min_length(const Order& order, double m);

struct ConstantChain {
    double small_c_bg;  // c(p, beta, gamma)
    double small_c_gb;  // c(v, gamma, beta)
    double big_C;
    double big_D;
    double big_E;
    double beta_val;  // B(1 - gamma, 1 - beta)
};

/// The whole chain for beta = gamma = 1 - alpha, p = v, at interval length L.
ConstantChain constant_chain(const Order& order, double p, double length);

struct BoundReport {
    double alpha;
    double p_used;
    double m;
    double length;
    double lhs;
    double rhs;
    bool satisfied;
    double min_length;
};

BoundReport bound_report(const Order& order, double p, double m, double length);

}  // namespace fitefrac::bounds
