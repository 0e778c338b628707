#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fitefrac/coefficient.hpp"
#include "fitefrac/error.hpp"
#include "fitefrac/weighted.hpp"

namespace fitefrac {

/// Coefficients of the linear sequential system
///   D^alpha f = G g + Q,   D^alpha g = R f + V
/// with the sup-norms of G and R over [a, c] cached at construction.
struct CoefficientSet {
    CoefficientSet(Coefficient G, Coefficient Q, Coefficient R, Coefficient V, double a, double c);

    Coefficient G, Q, R, V;
    double sup_G;
    double sup_R;
    double m;  // max(sup_G, sup_R)
};

enum class SolveMethod { Auto, Picard, Marching };
enum class SolvePath { Picard, Marching };

std::string to_string(SolvePath path);

struct SolveOptions {
    double tol = 1e-10;
    int max_iter = 200;
    SolveMethod method = SolveMethod::Auto;
};

struct SolveReport {
    WeightedFn f;
    WeightedFn g;
    int iterations = 0;
    double residual = 0.0;
    SolvePath path = SolvePath::Picard;
    bool converged = true;
    /// Weighted-norm size of each Picard increment (empty for marching).
    std::vector<double> increments;
};

/// Thrown when Picard iteration is forced and does not converge; carries the last iterate.
class SolveFailure : public ConvergenceError {
public:
    SolveFailure(const std::string& what, SolveReport partial);
    const SolveReport& partial() const { return *partial_; }

private:
    std::shared_ptr<const SolveReport> partial_;
};

/// Solves the integral form
///   f(x) = f_a (x-a)^(alpha-1) + 1/Gamma(alpha) int_a^x (G g + Q)(s) (x-s)^(alpha-1) ds
///   g(x) = g_a (x-a)^(alpha-1) + 1/Gamma(alpha) int_a^x (R f + V)(s) (x-s)^(alpha-1) ds
/// on the grid. In Auto mode Picard iteration seeded with the free terms is tried
/// first and the marching scheme takes over if it fails to converge.
SolveReport solve_system(const CoefficientSet& coeffs, const Order& order, double f_a, double g_a,
                         const GradedGrid& grid, const SolveOptions& opts = {});

/// Max regularized defect of both integral equations over nodes j >= 1.
double residual(const CoefficientSet& coeffs, const Order& order, const SolveReport& report);

/// D^alpha(D^alpha f) + P f = 0 as the system G = 1, Q = 0, R = -P, V = 0. g is D^alpha f.
SolveReport solve_fite(const Coefficient& P, const Order& order, double f_a, double g_a,
                       const GradedGrid& grid, const SolveOptions& opts = {});

/// D^alpha(D^alpha f) + P f = V with constant P > 0.
SolveReport solve_relax_osc(double P, const Coefficient& V, const Order& order, double f_a,
                            double g_a, const GradedGrid& grid, const SolveOptions& opts = {});

}  // namespace fitefrac
