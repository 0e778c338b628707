#pragma once

// Special functions used throughout the library: Gamma, log-Gamma, Beta and
// the two-parameter Mittag-Leffler function on a desk-scale domain.

namespace fitefrac::specfn {

/// Gamma function for x > 0 (Lanczos approximation, reflection below 1/2).
double gamma_fn(double x);

/// Natural log of Gamma for x > 0.
double log_gamma(double x);

/// Beta function B(x, y) evaluated in log space.
double beta_fn(double x, double y);

/// E_{order,weight}(z) by direct series summation.
///
/// Requires order in (0, 1], weight > 0 and |z| <= 50. Terms are summed until
/// their magnitude drops below 1e-16 times the running sum; throws
/// ConvergenceError if that has not happened after 10000 terms.
double mittag_leffler(double order, double weight, double z);

}  // namespace fitefrac::specfn
