#include "fitefrac/coefficient.hpp"

#include <algorithm>
#include <cmath>

#include "fitefrac/error.hpp"

namespace fitefrac {

Coefficient Coefficient::constant(double value) {
    if (!std::isfinite(value)) throw DomainError("coefficient: constant must be finite");
    Coefficient c;
    c.kind_ = Kind::Constant;
    c.value_ = value;
    return c;
}

Coefficient Coefficient::polynomial(std::vector<double> coeffs, double origin) {
    if (coeffs.empty()) throw DomainError("coefficient: polynomial needs at least one coefficient");
    for (double v : coeffs) {
        if (!std::isfinite(v)) throw DomainError("coefficient: polynomial coefficients must be finite");
    }
    Coefficient c;
    c.kind_ = Kind::Polynomial;
    c.coeffs_ = std::move(coeffs);
    c.origin_ = origin;
    return c;
}

Coefficient Coefficient::table(std::vector<std::pair<double, double>> points) {
    if (points.size() < 2) throw DomainError("coefficient: table needs at least two points");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!std::isfinite(points[i].first) || !std::isfinite(points[i].second)) {
            throw DomainError("coefficient: table entries must be finite");
        }
        if (i > 0 && !(points[i].first > points[i - 1].first)) {
            throw DomainError("coefficient: table abscissae must be strictly increasing");
        }
    }
    Coefficient c;
    c.kind_ = Kind::Table;
    c.points_ = std::move(points);
    return c;
}

Coefficient Coefficient::callable(std::function<double(double)> fn) {
    if (!fn) throw DomainError("coefficient: empty callable");
    Coefficient c;
    c.kind_ = Kind::Callable;
    c.fn_ = std::move(fn);
    return c;
}

double Coefficient::operator()(double t) const {
    switch (kind_) {
        case Kind::Constant:
            return value_;
        case Kind::Polynomial: {
            const double x = t - origin_;
            double acc = 0.0;
            for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
            return acc;
        }
        case Kind::Table: {
            // Constant extrapolation outside the table.
            if (t <= points_.front().first) return points_.front().second;
            if (t >= points_.back().first) return points_.back().second;
            auto it = std::upper_bound(points_.begin(), points_.end(), t,
                                       [](double v, const auto& p) { return v < p.first; });
            const auto& hi = *it;
            const auto& lo = *(it - 1);
            const double theta = (t - lo.first) / (hi.first - lo.first);
            return (1.0 - theta) * lo.second + theta * hi.second;
        }
        case Kind::Callable:
            return fn_(t);
    }
    return 0.0;
}

Coefficient Coefficient::negated() const {
    Coefficient out = *this;
    out.value_ = -value_;
    for (double& v : out.coeffs_) v = -v;
    for (auto& p : out.points_) p.second = -p.second;
    if (kind_ == Kind::Callable) {
        out.fn_ = [fn = fn_](double t) { return -fn(t); };
    }
    return out;
}

std::pair<double, double> Coefficient::range(double a, double c) const {
    if (kind_ == Kind::Constant) return {value_, value_};
    double lo = std::min((*this)(a), (*this)(c));
    double hi = std::max((*this)(a), (*this)(c));
    if (kind_ == Kind::Table) {
        for (const auto& [t, v] : points_) {
            if (t > a && t < c) {
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
        }
        return {hi, lo};
    }
    constexpr int kSamples = 4096;
    for (int i = 1; i < kSamples; ++i) {
        const double v = (*this)(a + (c - a) * i / kSamples);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return {hi, lo};
}

double Coefficient::sup_abs(double a, double c) const {
    const auto [hi, lo] = range(a, c);
    return std::max(std::abs(hi), std::abs(lo));
}

}  // namespace fitefrac
