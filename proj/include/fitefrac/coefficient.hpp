#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace fitefrac {

/// A continuous coefficient on [a, c]: a constant, a polynomial in (t - origin),
/// a linearly interpolated table, or an arbitrary callable.
class Coefficient {
public:
    enum class Kind { Constant, Polynomial, Table, Callable };

    static Coefficient constant(double value);
    static Coefficient polynomial(std::vector<double> coeffs, double origin);
    static Coefficient table(std::vector<std::pair<double, double>> points);
    static Coefficient callable(std::function<double(double)> fn);

    double operator()(double t) const;

    /// The coefficient t |-> -c(t), keeping its representation.
    Coefficient negated() const;

    Kind kind() const { return kind_; }
    bool is_zero() const { return kind_ == Kind::Constant && value_ == 0.0; }
    double constant_value() const { return value_; }
    const std::vector<double>& poly_coeffs() const { return coeffs_; }
    const std::vector<std::pair<double, double>>& table_points() const { return points_; }

    /// sup |coefficient| over [a, c]. Exact for constants and tables; polynomials
    /// and callables are sampled at 4097 equispaced points.
    double sup_abs(double a, double c) const;

    /// max and min over [a, c], with the same exactness rules as sup_abs.
    std::pair<double, double> range(double a, double c) const;

    std::function<double(double)> as_function() const {
        return [self = *this](double t) { return self(t); };
    }

private:
    Kind kind_ = Kind::Constant;
    double value_ = 0.0;
    double origin_ = 0.0;
    std::vector<double> coeffs_;
    std::vector<std::pair<double, double>> points_;
    std::function<double(double)> fn_;
};

}  // namespace fitefrac
