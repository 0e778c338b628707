#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fitefrac/weighted.hpp"

namespace fitefrac {

/// Zeros of a solution pair inside the window [b, c].
struct ZeroSet {
    std::vector<double> zeros_f;
    std::vector<double> zeros_g;
    double b = 0.0;
    double c = 0.0;
};

/// Sign changes of a piecewise-linear sequence (t_j, v_j) inside [b, c_w], each
/// refined by bisection to abs_tol and finished with the exact root of the
/// bracketing segment. Exact zeros at sample points are reported once; zeros
/// closer than abs_tol are merged. Tangential zeros are not detected.
std::vector<double> find_zeros_sampled(std::span<const double> t, std::span<const double> v, double b,
                                       double c_w, double abs_tol);

/// Zeros of f in [b, c_w] through its regularized samples; tolerance 1e-12 (c - a).
std::vector<double> find_zeros(const WeightedFn& w, double b, double c_w);

ZeroSet locate_zeros(const WeightedFn& f, const WeightedFn& g, double b, double c_w);

/// Earliest zero of f and earliest zero of g in the window, if both exist.
std::optional<std::pair<double, double>> first_zero_pair(const WeightedFn& f, const WeightedFn& g,
                                                         double b, double c_w);

}  // namespace fitefrac
