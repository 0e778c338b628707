#include <doctest.h>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>

#include "fitefrac/error.hpp"
#include "fitefrac/quadrature.hpp"
#include "fitefrac/specfn.hpp"

using namespace fitefrac;
using namespace fitefrac::quad;

namespace {
// int_{-1}^{1} (1-x)^ra (1+x)^la x^k dx by tanh-sinh, which tolerates the endpoint singularities.
double jacobi_moment(double ra, double la, int k) {
    boost::math::quadrature::tanh_sinh<double> ts;
    return ts.integrate([&](double x, double xc) {
        const double one_minus = x > 0 ? xc : 1.0 - x;
        const double one_plus = x < 0 ? -xc : 1.0 + x;
        return std::pow(one_minus, ra) * std::pow(one_plus, la) * std::pow(x, k);
    }, -1.0, 1.0);
}
}  // namespace

TEST_CASE("gauss-jacobi integrates polynomials exactly") {
    for (auto [ra, la] : {std::pair{0.0, 0.0}, {-0.25, 0.0}, {0.0, -0.4}, {-0.3, -0.45}}) {
        const GaussRule rule = gauss_jacobi(16, ra, la);
        REQUIRE(rule.nodes.size() == 16);
        for (int k = 0; k < 32; ++k) {
            double sum = 0.0;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * std::pow(rule.nodes[i], k);
            const double want = jacobi_moment(ra, la, k);
            CHECK_MESSAGE(std::abs(sum - want) < 1e-12 * std::max(1.0, std::abs(want)),
                          "ra=" << ra << " la=" << la << " k=" << k);
        }
    }
}

TEST_CASE("gauss-legendre nodes are symmetric and sorted") {
    const GaussRule rule = gauss_legendre(8);
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(rule.nodes[i] == doctest::Approx(-rule.nodes[7 - i]).epsilon(1e-14));
        if (i > 0) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
    }
    CHECK_THROWS_AS(gauss_jacobi(0, 0, 0), DomainError);
    CHECK_THROWS_AS(gauss_jacobi(4, -1.0, 0), DomainError);
}

TEST_CASE("singular kernel against tanh-sinh reference") {
    boost::math::quadrature::tanh_sinh<double> ts;
    const double a = 0.3, t = 2.1;
    for (auto [beta, gamma] : {std::pair{0.25, 0.25}, {0.4, 0.1}, {0.05, 0.6}, {0.5, 0.0}}) {
        const SingularKernel k(a, t, beta, gamma);
        auto phi = [](double s) { return std::cos(3 * s) + s * s; };
        for (auto [lo, hi] : {std::pair{a, t}, {a, 0.31}, {1.0, t}, {0.5, 1.7}, {2.0999, t}}) {
            // xc is the exact signed distance to the nearer end of [lo, hi].
            auto integrand = [&](double s, double xc) {
                const double left = (xc < 0 && lo == a) ? -xc : s - a;
                const double right = (xc > 0 && hi == t) ? xc : t - s;
                return std::pow(left, -gamma) * std::pow(right, -beta) * phi(s);
            };
            const double got = k.integrate(lo, hi, phi);
            const double want = ts.integrate(integrand, lo, hi);
            CHECK_MESSAGE(std::abs(got - want) < 1e-12 * std::max(1.0, std::abs(want)),
                          "beta=" << beta << " gamma=" << gamma << " [" << lo << "," << hi << "]");
        }
    }
}

TEST_CASE("full-interval moment equals a beta function") {
    const double a = 0.0, t = 1.7, beta = 0.3, gamma = 0.45;
    const SingularKernel k(a, t, beta, gamma);
    const auto m = k.linear_moments(a, t);
    const double want0 = std::pow(t - a, 1 - beta - gamma) * specfn::beta_fn(1 - gamma, 1 - beta);
    const double want1 = std::pow(t - a, 1 - beta - gamma) * specfn::beta_fn(2 - gamma, 1 - beta);
    CHECK(m[0] == doctest::Approx(want0).epsilon(1e-13));
    CHECK(m[1] == doctest::Approx(want1).epsilon(1e-13));
    CHECK_THROWS_AS(k.linear_moments(-0.1, 1.0), DomainError);
}

TEST_CASE("product weights reproduce moments of piecewise-linear data") {
    const std::size_t n = 64;
    const double beta = 0.25, gamma = 0.25;
    const auto pw = ProductWeights::get(n, 2.0, beta, gamma);
    CHECK(ProductWeights::get(n, 2.0, beta, gamma) == pw);
    // Unit interval: sum of row i equals int_0^{t_i} s^-gamma (t_i - s)^-beta ds.
    for (std::size_t i : {1u, 2u, 7u, 33u, 64u}) {
        const double ti = std::pow(static_cast<double>(i) / n, 2.0);
        double sum = 0.0;
        for (std::size_t k = 0; k <= i; ++k) sum += pw->row(i)[k];
        const double want = std::pow(ti, 1 - beta - gamma) * specfn::beta_fn(1 - gamma, 1 - beta);
        CHECK_MESSAGE(sum == doctest::Approx(want).epsilon(1e-13), "i = " << i);
    }
}

TEST_CASE("ramp moments sum to the first-moment beta integral") {
    const std::size_t n = 96;
    const double beta = 0.6, gamma = 0.3;
    const auto pw = ProductWeights::get(n, 2.0, beta, gamma, ProductWeights::Basis::Ramp);
    CHECK(pw != ProductWeights::get(n, 2.0, beta, gamma));
    for (std::size_t i : {1u, 5u, 40u, 96u}) {
        const double ti = std::pow(static_cast<double>(i) / n, 2.0);
        double sum = 0.0;
        for (std::size_t k = 0; k < i; ++k) sum += pw->row(i)[k];
        const double want = std::pow(ti, 2 - beta - gamma) * specfn::beta_fn(2 - gamma, 1 - beta);
        CHECK_MESSAGE(sum == doctest::Approx(want).epsilon(1e-13), "i = " << i);
    }
}
