#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fitefrac/weighted.hpp"

namespace fitefrac::bounds {

/// One audited estimate: how often it was checked, how often it held, and the
/// largest observed lhs / rhs ratio.
struct InequalityTally {
    std::string name;
    int checked = 0;
    int passed = 0;
    double worst_ratio = 0.0;
};

struct AuditFailure {
    std::string inequality;
    int trial = 0;
    std::uint64_t trial_seed = 0;
    double lhs = 0.0;
    double rhs = 0.0;
};

struct AuditReport {
    double alpha = 0.0;
    double p = 0.0;
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<InequalityTally> tallies;  // empty when trials == 0
    std::vector<AuditFailure> failures;

    bool all_passed() const { return failures.empty(); }
};

/// Names of the audited estimates, in report order.
const std::vector<std::string>& audited_inequalities();

/// Relative slack granted to every audited inequality: lhs <= rhs (1 + kAuditSlack).
inline constexpr double kAuditSlack = 1e-6;

/// Draws `trials` random admissible instances and checks every estimate on each.
/// Even trials use beta = gamma = 1 - alpha; odd trials draw (beta, gamma) with
/// beta + gamma <= 1 and gamma p, beta p < 1, exercising the b-dependent branch of D.
/// Trial seeds derive deterministically from `seed`.
AuditReport audit_estimates(const Order& order, double p, int trials, std::uint64_t seed);

/// D of the increment estimate for general exponents (p = v). When the exponent
/// 1 - beta - gamma - 1/q is negative, (t2 - a)^e is bounded by (b - a)^e + (c - a)^e.
double general_D(double p, double beta, double gamma, double b_minus_a, double c_minus_a);

/// Deterministic per-trial seed.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

}  // namespace fitefrac::bounds
