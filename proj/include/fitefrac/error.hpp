#pragma once

#include <stdexcept>
#include <string>

namespace fitefrac {

// Argument outside the domain of an operation (bad interval, order, window...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An iterative procedure did not reach its stopping criterion.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, int iterations, double last_ratio)
        : std::runtime_error(what), iterations_(iterations), last_ratio_(last_ratio) {}

    int iterations() const { return iterations_; }
    double last_ratio() const { return last_ratio_; }

private:
    int iterations_;
    double last_ratio_;
};

// Singular-kernel moment evaluation failed to resolve a cell.
class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace fitefrac
