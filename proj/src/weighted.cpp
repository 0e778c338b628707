#include "fitefrac/weighted.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fitefrac/error.hpp"

namespace fitefrac {

Order::Order(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.5 && alpha < 1.0)) {
        throw DomainError("order alpha must lie in (1/2, 1), got " + std::to_string(alpha));
    }
}

GradedGrid::GradedGrid(double a, double c, std::size_t n, double r) : a_(a), c_(c), n_(n), r_(r) {
    if (!std::isfinite(a) || !std::isfinite(c) || !(a < c)) {
        throw DomainError("grid: invalid interval, need a < c (a=" + std::to_string(a) +
                          ", c=" + std::to_string(c) + ")");
    }
    if (n < 2) {
        throw DomainError("grid: need at least 2 cells");
    }
    if (!(r >= 1.0) || !std::isfinite(r)) {
        throw DomainError("grid: grading exponent must be >= 1");
    }
    nodes_.resize(n + 1);
    const double len = c - a;
    for (std::size_t j = 0; j <= n; ++j) {
        const double x = static_cast<double>(j) / static_cast<double>(n);
        nodes_[j] = a + len * std::pow(x, r);
    }
    nodes_.front() = a;
    nodes_.back() = c;
}

std::size_t GradedGrid::cell_of(double t) const {
    if (t <= a_) return 0;
    if (t >= c_) return n_ - 1;
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), t);
    const auto k = static_cast<std::size_t>(it - nodes_.begin()) - 1;
    return std::min(k, n_ - 1);
}

bool GradedGrid::same_as(const GradedGrid& other) const {
    return a_ == other.a_ && c_ == other.c_ && n_ == other.n_ && r_ == other.r_;
}

GradedGrid build_grid(double a, double c, std::size_t n, double r) { return GradedGrid(a, c, n, r); }

WeightedFn::WeightedFn(double gamma, GradedGrid grid, std::vector<double> reg_samples)
    : gamma_(gamma), grid_(std::move(grid)), reg_(std::move(reg_samples)) {
    if (reg_.size() != grid_.size()) {
        throw DomainError("weighted function: sample count does not match grid");
    }
    if (!(gamma >= 0.0 && gamma < 1.0)) {
        throw DomainError("weighted function: weight exponent must lie in [0, 1)");
    }
    for (std::size_t j = 0; j < reg_.size(); ++j) {
        if (!std::isfinite(reg_[j])) {
            throw DomainError("weighted function: non-finite sample at node " + std::to_string(j));
        }
    }
}

double WeightedFn::eval_reg(double t) const {
    if (!(t >= grid_.a() && t <= grid_.c())) {
        throw DomainError("eval: t outside [a, c]");
    }
    const std::size_t k = grid_.cell_of(t);
    const double t0 = grid_.node(k);
    const double t1 = grid_.node(k + 1);
    const double theta = (t - t0) / (t1 - t0);
    return (1.0 - theta) * reg_[k] + theta * reg_[k + 1];
}

double WeightedFn::eval_raw(double t) const {
    if (!(t > grid_.a() && t <= grid_.c())) {
        throw DomainError("eval_raw: t must lie in (a, c]");
    }
    return eval_reg(t) / std::pow(t - grid_.a(), gamma_);
}

double WeightedFn::norm_window(double b, double c_w) const {
    if (!(b > grid_.a() && b <= c_w && c_w <= grid_.c())) {
        throw DomainError("norm_window: need a < b <= c_w <= c");
    }
    double best = std::max(std::abs(eval_reg(b)), std::abs(eval_reg(c_w)));
    const auto nodes = grid_.nodes();
    auto first = std::lower_bound(nodes.begin(), nodes.end(), b);
    for (auto it = first; it != nodes.end() && *it <= c_w; ++it) {
        best = std::max(best, std::abs(reg_[static_cast<std::size_t>(it - nodes.begin())]));
    }
    return best;
}

double WeightedFn::norm_full() const {
    double best = 0.0;
    for (double w : reg_) best = std::max(best, std::abs(w));
    return best;
}

WeightedFn from_callable(const RegularizedFn& reg, double f_a, double gamma, const GradedGrid& grid) {
    std::vector<double> samples(grid.size());
    samples[0] = f_a;
    for (std::size_t j = 1; j < grid.size(); ++j) {
        samples[j] = reg(grid.node(j));
        if (!std::isfinite(samples[j])) {
            throw DomainError("from_callable: non-finite sample at t=" + std::to_string(grid.node(j)));
        }
    }
    return WeightedFn(gamma, grid, std::move(samples));
}

double reg_distance(const WeightedFn& lhs, const WeightedFn& rhs) {
    if (!lhs.grid().same_as(rhs.grid()) || lhs.gamma() != rhs.gamma()) {
        throw DomainError("reg_distance: functions live on different grids or weights");
    }
    double d = 0.0;
    for (std::size_t j = 0; j < lhs.reg().size(); ++j) {
        d = std::max(d, std::abs(lhs.reg(j) - rhs.reg(j)));
    }
    return d;
}

}  // namespace fitefrac
