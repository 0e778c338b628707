#include "fitefrac/zeros.hpp"

#include <algorithm>
#include <cmath>

#include "fitefrac/error.hpp"

namespace fitefrac {

namespace {

double lerp_at(double t0, double v0, double t1, double v1, double t) {
    const double theta = (t - t0) / (t1 - t0);
    return (1.0 - theta) * v0 + theta * v1;
}

double refine(double t0, double v0, double t1, double v1, double abs_tol) {
    double lo = t0, hi = t1, vlo = v0;
    while (hi - lo > abs_tol) {
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) break;
        const double vm = lerp_at(t0, v0, t1, v1, mid);
        if (vm == 0.0) return mid;
        if ((vm < 0.0) == (vlo < 0.0)) {
            lo = mid;
            vlo = vm;
        } else {
            hi = mid;
        }
    }
    // The interpolant is linear on the bracket: finish with its exact root.
    const double vl = lerp_at(t0, v0, t1, v1, lo);
    const double vh = lerp_at(t0, v0, t1, v1, hi);
    if (vl == vh) return 0.5 * (lo + hi);
    const double root = lo - vl * (hi - lo) / (vh - vl);
    return std::clamp(root, lo, hi);
}

}  // namespace

std::vector<double> find_zeros_sampled(std::span<const double> t, std::span<const double> v, double b,
                                       double c_w, double abs_tol) {
    if (t.size() != v.size() || t.size() < 2) {
        throw DomainError("find_zeros: need matching abscissae and values");
    }
    if (!(b > t.front() && b < c_w && c_w <= t.back())) {
        throw DomainError("find_zeros: window must satisfy a < b < c_w <= c");
    }

    // Sample points restricted to the window, with the interpolant at both ends.
    auto value_at = [&](double x) {
        auto it = std::upper_bound(t.begin(), t.end(), x);
        std::size_t k = static_cast<std::size_t>(it - t.begin());
        k = std::clamp<std::size_t>(k, 1, t.size() - 1) - 1;
        return lerp_at(t[k], v[k], t[k + 1], v[k + 1], x);
    };
    std::vector<double> xs{b};
    std::vector<double> vs{value_at(b)};
    for (std::size_t j = 0; j < t.size(); ++j) {
        if (t[j] > b && t[j] < c_w) {
            xs.push_back(t[j]);
            vs.push_back(v[j]);
        }
    }
    xs.push_back(c_w);
    vs.push_back(value_at(c_w));

    std::vector<double> zeros;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (vs[i] == 0.0) {
            zeros.push_back(xs[i]);
            continue;
        }
        if (i + 1 < xs.size() && vs[i + 1] != 0.0 && ((vs[i] < 0.0) != (vs[i + 1] < 0.0))) {
            zeros.push_back(refine(xs[i], vs[i], xs[i + 1], vs[i + 1], abs_tol));
        }
    }

    std::vector<double> merged;
    for (double z : zeros) {
        if (merged.empty() || z - merged.back() > abs_tol) merged.push_back(z);
    }
    return merged;
}

std::vector<double> find_zeros(const WeightedFn& w, double b, double c_w) {
    const GradedGrid& grid = w.grid();
    return find_zeros_sampled(grid.nodes(), w.reg(), b, c_w, 1e-12 * grid.length());
}

ZeroSet locate_zeros(const WeightedFn& f, const WeightedFn& g, double b, double c_w) {
    if (!f.grid().same_as(g.grid())) {
        throw DomainError("locate_zeros: f and g must share a grid");
    }
    return ZeroSet{find_zeros(f, b, c_w), find_zeros(g, b, c_w), b, c_w};
}

std::optional<std::pair<double, double>> first_zero_pair(const WeightedFn& f, const WeightedFn& g,
                                                         double b, double c_w) {
    const ZeroSet zs = locate_zeros(f, g, b, c_w);
    if (zs.zeros_f.empty() || zs.zeros_g.empty()) return std::nullopt;
    return std::make_pair(zs.zeros_f.front(), zs.zeros_g.front());
}

}  // namespace fitefrac
