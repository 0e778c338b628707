#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "fitefrac/quadrature.hpp"
#include "fitefrac/weighted.hpp"

namespace fitefrac {

using CoefficientFn = std::function<double(double)>;

/// Discrete form of u |-> int_a^{t_i} u(s) (s - a)^-gamma (t_i - s)^-beta ds on a
/// grid, for u piecewise linear between the nodes. Row i of the operator is
/// scale() * weights(i)[0..i].
class KernelOperator {
public:
    KernelOperator(const GradedGrid& grid, double beta, double gamma);

    const GradedGrid& grid() const { return grid_; }
    double beta() const { return beta_; }
    double gamma() const { return gamma_; }
    double scale() const { return scale_; }
    const double* weights(std::size_t i) const { return table_->row(i); }

    /// All node values; entry 0 is the (zero-length) integral at a.
    std::vector<double> apply(std::span<const double> u) const;

    /// Value at node i.
    double apply_at(std::size_t i, std::span<const double> u) const;

private:
    GradedGrid grid_;
    double beta_;
    double gamma_;
    double scale_;
    std::shared_ptr<const quad::ProductWeights> table_;
};

/// (Q f)(t) = int_a^t A(s) f(s) / (t - s)^beta ds by product integration.
/// Needs beta + gamma(w) <= 1. The result has weight exponent 0; its value at a is
/// 0 when beta + gamma < 1 and A(a) f_a B(1 - gamma, 1 - beta) when beta + gamma = 1.
WeightedFn q_operator(const WeightedFn& w, const CoefficientFn& A, double beta);

/// Riemann-Liouville integral of order mu in (0, 1): Q with A = 1, beta = 1 - mu, over Gamma(mu).
WeightedFn rl_integral(const WeightedFn& w, double mu);

/// Riemann-Liouville derivative of order zeta in (0, 1): d/dt of rl_integral(w, 1 - zeta),
/// differentiated with non-uniform three-point differences. The result carries weight
/// exponent zeta; its value at a is linearly extrapolated from the first two nodes.
WeightedFn rl_derivative(const WeightedFn& w, double zeta);

}  // namespace fitefrac
