#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace fitefrac {

/// Fractional order alpha in (1/2, 1) together with its weight exponent 1 - alpha.
class Order {
public:
    explicit Order(double alpha);

    double alpha() const { return alpha_; }
    double gamma() const { return 1.0 - alpha_; }

private:
    double alpha_;
};

/// Graded mesh t_j = a + (c - a) (j/n)^r, j = 0..n. r = 1 is uniform.
class GradedGrid {
public:
    GradedGrid(double a, double c, std::size_t n, double r);

    double a() const { return a_; }
    double c() const { return c_; }
    double length() const { return c_ - a_; }
    std::size_t cells() const { return n_; }
    double grading() const { return r_; }
    std::span<const double> nodes() const { return nodes_; }
    double node(std::size_t j) const { return nodes_[j]; }
    std::size_t size() const { return nodes_.size(); }

    /// Index k of the cell [t_k, t_{k+1}] containing t (t in [a, c]).
    std::size_t cell_of(double t) const;

    /// Same a, c, n and r.
    bool same_as(const GradedGrid& other) const;

private:
    double a_;
    double c_;
    std::size_t n_;
    double r_;
    std::vector<double> nodes_;
};

GradedGrid build_grid(double a, double c, std::size_t n, double r = 2.0);

/// A function f of the weighted space X_gamma, stored through its regularized
/// samples W(t_j) = (t_j - a)^gamma f(t_j); W(t_0) holds the limit value f_a.
/// Between nodes W is interpolated linearly.
class WeightedFn {
public:
    WeightedFn(double gamma, GradedGrid grid, std::vector<double> reg_samples);

    double gamma() const { return gamma_; }
    const GradedGrid& grid() const { return grid_; }
    std::span<const double> reg() const { return reg_; }
    double reg(std::size_t j) const { return reg_[j]; }
    double f_a() const { return reg_.front(); }

    /// Regularized interpolant W(t) for t in [a, c].
    double eval_reg(double t) const;

    /// f(t) = W(t) / (t - a)^gamma for t in (a, c].
    double eval_raw(double t) const;

    /// Weighted sup over the window [b, c_w]: max |W| over nodes in the window and both ends.
    double norm_window(double b, double c_w) const;

    /// Weighted sup over (a, c], including |f_a|.
    double norm_full() const;

private:
    double gamma_;
    GradedGrid grid_;
    std::vector<double> reg_;
};

using RegularizedFn = std::function<double(double)>;

/// Sample a regularized callable reg(t) = (t - a)^gamma f(t) at the grid nodes j >= 1;
/// the value at a is taken to be f_a.
WeightedFn from_callable(const RegularizedFn& reg, double f_a, double gamma, const GradedGrid& grid);

/// Max |W_1 - W_2| over all nodes; both functions must share grid and weight exponent.
double reg_distance(const WeightedFn& lhs, const WeightedFn& rhs);

}  // namespace fitefrac
