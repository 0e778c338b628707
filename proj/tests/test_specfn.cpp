#include <doctest.h>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <numbers>

#include "fitefrac/error.hpp"
#include "fitefrac/specfn.hpp"
#include "oracle_values.hpp"

using namespace fitefrac;
using specfn::beta_fn;
using specfn::gamma_fn;
using specfn::mittag_leffler;

namespace {
double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }
}  // namespace

TEST_CASE("gamma at known points") {
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rel(gamma_fn(0.5), std::sqrt(std::numbers::pi)) < 1e-14);
    CHECK(rel(gamma_fn(0.75), oracle::gamma_075) < 1e-14);
    CHECK(rel(1.0 / gamma_fn(0.25), oracle::inv_gamma_025) < 1e-14);
    CHECK(rel(1.0 / gamma_fn(1.75), oracle::inv_gamma_175) < 1e-14);
    CHECK(rel(gamma_fn(11.0), 3628800.0) < 1e-13);
}

TEST_CASE("gamma matches a 50-digit reference on (0, 50]") {
    using big = boost::multiprecision::cpp_bin_float_50;
    for (double x = 0.013; x <= 50.0; x += 0.377) {
        const double want = static_cast<double>(boost::math::tgamma(big(x)));
        CHECK_MESSAGE(rel(gamma_fn(x), want) < 1e-12, "x = " << x);
        const double lwant = static_cast<double>(boost::math::lgamma(big(x)));
        CHECK(std::abs(specfn::log_gamma(x) - lwant) < 1e-12 * std::max(1.0, std::abs(lwant)));
    }
}

TEST_CASE("gamma recurrence") {
    for (double x = 0.1; x <= 10.0 + 1e-9; x += 0.15) {
        CHECK_MESSAGE(rel(gamma_fn(x + 1.0), x * gamma_fn(x)) < 1e-12, "x = " << x);
    }
}

TEST_CASE("gamma domain") {
    CHECK_THROWS_AS(gamma_fn(0.0), DomainError);
    CHECK_THROWS_AS(gamma_fn(-1.5), DomainError);
    CHECK_THROWS_AS(gamma_fn(std::nan("")), DomainError);
    CHECK_THROWS_AS(gamma_fn(INFINITY), DomainError);
}

TEST_CASE("beta values and identities") {
    CHECK(rel(beta_fn(1.0, 1.0), 1.0) < 1e-14);
    CHECK(rel(beta_fn(0.75, 0.25), oracle::beta_075_025) < 1e-13);
    CHECK(rel(beta_fn(0.75, 0.75), oracle::beta_075_075) < 1e-13);
    CHECK(rel(beta_fn(2.0, 0.75), oracle::beta_2_075) < 1e-13);
    CHECK_THROWS_AS(beta_fn(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(beta_fn(1.0, -2.0), DomainError);
}

TEST_CASE("beta reflection") {
    for (double x = 0.01; x < 1.0; x += 0.0325) {
        CHECK_MESSAGE(rel(beta_fn(x, 1.0 - x), std::numbers::pi / std::sin(std::numbers::pi * x)) < 1e-10,
                      "x = " << x);
    }
}

TEST_CASE("beta symmetry is exact") {
    for (double x : {0.1, 0.37, 0.75, 2.5, 17.0}) {
        for (double y : {0.2, 0.75, 1.3, 40.0}) {
            CHECK(beta_fn(x, y) == beta_fn(y, x));
        }
    }
}

TEST_CASE("beta stays finite where gamma overflows") {
    const double v = beta_fn(200.0, 150.0);
    CHECK(std::isfinite(v));
    CHECK(v > 0.0);
}

TEST_CASE("mittag-leffler") {
    CHECK(rel(mittag_leffler(1.0, 1.0, 1.0), std::exp(1.0)) < 1e-14);
    for (double z = -10.0; z <= 10.0; z += 0.5) {
        CHECK_MESSAGE(rel(mittag_leffler(1.0, 1.0, z), std::exp(z)) < 1e-10, "z = " << z);
    }
    CHECK(mittag_leffler(0.3, 2.5, 0.0) == doctest::Approx(1.0 / gamma_fn(2.5)).epsilon(1e-15));
    CHECK(rel(mittag_leffler(0.75, 0.75, 1.0), oracle::ml_075_075_at_1) < 1e-13);
    CHECK(rel(mittag_leffler(0.75, 1.0, -1.0), oracle::ml_075_1_at_m1) < 1e-12);
    CHECK(rel(mittag_leffler(0.5, 1.0, -2.0), oracle::ml_05_1_at_m2) < 1e-10);
    // E_{1/2,1}(z) = exp(z^2) erfc(-z)
    CHECK(rel(mittag_leffler(0.5, 1.0, 1.5), std::exp(2.25) * std::erfc(-1.5)) < 1e-12);
}

TEST_CASE("mittag-leffler domain") {
    CHECK_THROWS_AS(mittag_leffler(0.0, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(mittag_leffler(1.5, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(mittag_leffler(0.5, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(mittag_leffler(0.5, 1.0, 60.0), DomainError);
}
