#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fitefrac/coefficient.hpp"
#include "fitefrac/sfde.hpp"
#include "fitefrac/weighted.hpp"

namespace fitefrac::verify {

enum class Verdict { BoundHolds, NoZeroPair, Counterexample, SolverFailed };

std::string to_string(Verdict v);

/// One instance of D^alpha(D^alpha f) + P f = V on [a, c] with zero window [b, c].
/// V absent means the Fite equation (V = 0, P may vary); V present requires constant P > 0.
struct Scenario {
    double alpha = 0.75;
    double a = 0.0;
    double b = 0.01;
    double c = 1.0;
    Coefficient P = Coefficient::constant(1.0);
    std::optional<Coefficient> V;
    double f_a = 0.0;
    double g_a = 1.0;
    std::size_t n = 1024;
    double r = 2.0;
    SolveOptions solver;
};

/// Throws DomainError naming the offending field.
void validate(const Scenario& s);

struct VerifyReport {
    Scenario scenario;
    Verdict verdict = Verdict::NoZeroPair;
    double p_inf = 0.0;
    double m = 0.0;
    double residual = 0.0;
    std::string solve_path;
    std::string failure;  // solver message when verdict is SolverFailed
    double f_norm = 0.0;
    std::optional<std::pair<double, double>> zero_pair;
    double p_star = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    bool satisfied = false;
    double min_length = 0.0;
};

struct RunOptions {
    /// Multiplies the theorem's right-hand side. Only for negative-path testing.
    double rhs_scale = 1.0;
};

VerifyReport run_scenario(const Scenario& s, const RunOptions& opts = {});

struct SweepSpec {
    std::vector<double> alphas;
    std::vector<double> p_infs;
    std::vector<double> lengths;
    int directions = 8;
    std::uint64_t seed = 42;
    double a = 0.0;
    double b_fraction = 0.01;  // b = a + b_fraction (c - a)
    std::size_t n = 1024;
    double r = 2.0;
    SolveOptions solver;
};

/// Initial-data angles on the unit circle: one jittered angle per sector.
std::vector<double> direction_angles(int directions, std::uint64_t seed);

/// Scenarios of the sweep in canonical (alpha, P, length, direction) order.
std::vector<Scenario> expand(const SweepSpec& spec);

struct SweepReport {
    std::map<std::string, int> counts;  // keyed by verdict name
    std::vector<VerifyReport> records;  // canonical order
    std::vector<VerifyReport> counterexamples;
    /// Smallest lhs / rhs among scenarios with a zero pair (absent if none).
    std::optional<double> min_ratio;
};

/// Runs every scenario (on `workers` threads); the report does not depend on the worker count.
SweepReport sweep(const SweepSpec& spec, int workers = 1, const RunOptions& opts = {});

/// x'' + P x = 0 with x = sin(sqrt(P) t): if x and x' both vanish in [b, c], checks
/// (c - b) max(1, P) >= 1. Vacuously true otherwise.
bool classical_fite_check(double P, double b, double c);

}  // namespace fitefrac::verify
