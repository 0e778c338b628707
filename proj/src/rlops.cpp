#include "fitefrac/rlops.hpp"

#include <cmath>
#include <string>

#include "fitefrac/error.hpp"
#include "fitefrac/specfn.hpp"

namespace fitefrac {

namespace {

constexpr double kRegimeSlack = 1e-12;

bool on_regime_boundary(double beta, double gamma) {
    return std::abs(beta + gamma - 1.0) <= kRegimeSlack;
}

}  // namespace

KernelOperator::KernelOperator(const GradedGrid& grid, double beta, double gamma)
    : grid_(grid), beta_(beta), gamma_(gamma) {
    if (!(beta >= 0.0 && beta < 1.0 && gamma >= 0.0 && gamma < 1.0)) {
        throw DomainError("kernel operator: exponents must lie in [0, 1)");
    }
    scale_ = std::pow(grid.length(), 1.0 - beta - gamma);
    table_ = quad::ProductWeights::get(grid.cells(), grid.grading(), beta, gamma);
}

double KernelOperator::apply_at(std::size_t i, std::span<const double> u) const {
    const double* w = table_->row(i);
    double acc = 0.0;
    for (std::size_t k = 0; k <= i; ++k) acc += w[k] * u[k];
    return scale_ * acc;
}

std::vector<double> KernelOperator::apply(std::span<const double> u) const {
    if (u.size() != grid_.size()) {
        throw DomainError("kernel operator: sample count does not match grid");
    }
    std::vector<double> out(u.size(), 0.0);
    for (std::size_t i = 1; i < u.size(); ++i) out[i] = apply_at(i, u);
    return out;
}

WeightedFn q_operator(const WeightedFn& w, const CoefficientFn& A, double beta) {
    const double gamma = w.gamma();
    if (!(beta > 0.0 && beta < 1.0)) {
        throw DomainError("q_operator: beta must lie in (0, 1)");
    }
    if (beta + gamma > 1.0 + kRegimeSlack) {
        throw DomainError("q_operator: regime violated, beta + gamma = " +
                          std::to_string(beta + gamma) + " > 1");
    }
    const GradedGrid& grid = w.grid();
    std::vector<double> u(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) u[j] = A(grid.node(j)) * w.reg(j);

    const KernelOperator op(grid, beta, gamma);
    std::vector<double> out = op.apply(u);
    out[0] = on_regime_boundary(beta, gamma) ? u[0] * specfn::beta_fn(1.0 - gamma, 1.0 - beta) : 0.0;
    return WeightedFn(0.0, grid, std::move(out));
}

WeightedFn rl_integral(const WeightedFn& w, double mu) {
    if (!(mu > 0.0 && mu < 1.0)) {
        throw DomainError("rl_integral: order must lie in (0, 1)");
    }
    WeightedFn q = q_operator(w, [](double) { return 1.0; }, 1.0 - mu);
    const double inv = 1.0 / specfn::gamma_fn(mu);
    std::vector<double> out(q.reg().begin(), q.reg().end());
    for (double& v : out) v *= inv;
    return WeightedFn(0.0, w.grid(), std::move(out));
}

// Differentiates the product-integrated primitive exactly. With W the piecewise
// linear regularized integrand and K = (t - s)^-beta (s - a)^-gamma, beta = zeta,
//   (t - a) d/dt int K W ds = (1 - beta - gamma) int K W ds + int K (s - a) W'(s) ds,
// and W' is constant on each cell.
WeightedFn rl_derivative(const WeightedFn& w, double zeta) {
    if (!(zeta > 0.0 && zeta < 1.0)) {
        throw DomainError("rl_derivative: order must lie in (0, 1)");
    }
    const double beta = zeta;
    const double gamma = w.gamma();
    if (beta + gamma > 1.0 + kRegimeSlack) {
        throw DomainError("rl_derivative: need zeta + weight exponent <= 1");
    }
    const GradedGrid& grid = w.grid();
    const std::size_t n = grid.cells();
    const double L = grid.length();
    const auto t = grid.nodes();
    const auto u = w.reg();

    const KernelOperator hat(grid, beta, gamma);
    const auto ramp = quad::ProductWeights::get(n, grid.grading(), beta, gamma, quad::ProductWeights::Basis::Ramp);
    // Slopes of W in normalized abscissae; ramp moments carry one extra power of L.
    std::vector<double> slope(n);
    for (std::size_t k = 0; k < n; ++k) slope[k] = (u[k + 1] - u[k]) / ((t[k + 1] - t[k]) / L);

    const double kappa = on_regime_boundary(beta, gamma) ? 0.0 : 1.0 - beta - gamma;
    const double inv_gamma = 1.0 / specfn::gamma_fn(1.0 - zeta);
    std::vector<double> out(grid.size());
    for (std::size_t i = 1; i <= n; ++i) {
        const double* m = ramp->row(i);
        double acc = 0.0;
        for (std::size_t k = 0; k < i; ++k) acc += m[k] * slope[k];
        const double x = t[i] - grid.a();
        const double deriv = (kappa * hat.apply_at(i, u) + hat.scale() * acc) / x * inv_gamma;
        out[i] = std::pow(x, zeta) * deriv;
    }
    const double x1 = t[1] - grid.a();
    const double x2 = t[2] - grid.a();
    out[0] = out[1] - (out[2] - out[1]) * x1 / (x2 - x1);
    return WeightedFn(zeta, grid, std::move(out));
}

}  // namespace fitefrac
