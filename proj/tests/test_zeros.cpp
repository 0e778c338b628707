#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fitefrac/error.hpp"
#include "fitefrac/sfde.hpp"
#include "fitefrac/zeros.hpp"

using namespace fitefrac;

TEST_CASE("sampled zeros: sign changes, node zeros, window") {
    const std::vector<double> t{0, 1, 2, 3, 4, 5};
    const std::vector<double> v{1, -1, 0, 2, -2, -3};
    const auto z = find_zeros_sampled(t, v, 0.5, 5, 1e-12);
    // the window start is itself an exact zero of the interpolant
    REQUIRE(z.size() == 3);
    CHECK(z[0] == 0.5);
    CHECK(z[1] == 2.0);
    CHECK(z[2] == doctest::Approx(3.5));
    const auto inner = find_zeros_sampled(t, v, 0.2, 4.8, 1e-12);
    CHECK(inner.size() == 3);
    CHECK(inner[0] == doctest::Approx(0.5));
    CHECK_THROWS_AS(find_zeros_sampled(t, v, 0.0, 4, 1e-12), DomainError);
    CHECK_THROWS_AS(find_zeros_sampled(t, v, 3, 2, 1e-12), DomainError);
    CHECK_THROWS_AS(find_zeros_sampled(t, v, 1, 6, 1e-12), DomainError);
}

TEST_CASE("tangential zeros are not reported") {
    const std::vector<double> t{0, 1, 2, 3};
    const std::vector<double> v{1, 0.5, 1e-3, 1};
    CHECK(find_zeros_sampled(t, v, 0.5, 3, 1e-12).empty());
}

TEST_CASE("zero counts of sin(k (t - a)) match the analytic count") {
    const double a = 0.3, c = 0.3 + 2 * std::numbers::pi;
    const auto grid = build_grid(a, c, 1024);
    for (int k = 1; k <= 20; ++k) {
        const auto w = from_callable([&](double t) { return std::sin(k * (t - a)); }, 0.0, 0.25, grid);
        const double b = a + 0.05;
        const auto z = find_zeros(w, b, c - 0.05);
        int analytic = 0;
        for (int m = 1; m < 2 * k; ++m) {
            const double root = a + m * std::numbers::pi / k;
            if (root >= b && root <= c - 0.05) ++analytic;
        }
        CHECK_MESSAGE(static_cast<int>(z.size()) == analytic, "k = " << k);
        for (std::size_t i = 0; i < z.size(); ++i) {
            if (i > 0) CHECK(z[i] > z[i - 1]);
            CHECK(z[i] >= b);
            CHECK(z[i] <= c - 0.05);
            // refinement stays inside the bracketing cell
            auto brackets = [&](std::size_t k) {
                return grid.node(k) <= z[i] && z[i] <= grid.node(k + 1) &&
                       (w.reg(k) == 0.0 || w.reg(k + 1) == 0.0 || (w.reg(k) < 0) != (w.reg(k + 1) < 0));
            };
            const std::size_t cell = grid.cell_of(z[i]);
            CHECK((brackets(cell) || (cell > 0 && brackets(cell - 1))));
        }
    }
}

TEST_CASE("zeros of a fite solution re-evaluate to near zero") {
    const auto rep = solve_fite(Coefficient::constant(4), Order(0.75), 0, 1, build_grid(0, 8, 1024));
    const auto z = find_zeros(rep.f, 0.1, 8);
    REQUIRE(!z.empty());
    const double norm = rep.f.norm_window(0.1, 8);
    for (double x : z) CHECK(std::abs(rep.f.eval_reg(x)) <= 1e-10 * norm);
}

TEST_CASE("close zeros are merged") {
    const std::vector<double> t{0, 1, 1 + 1e-14, 2};
    const std::vector<double> v{1, 0, 0, 1};
    CHECK(find_zeros_sampled(t, v, 0.5, 2, 1e-12).size() == 1);
}

TEST_CASE("first zero pair") {
    const auto grid = build_grid(0, 3, 512, 1);
    const auto f = from_callable([](double t) { return t - 1.0; }, 0.0, 0.25, grid);
    const auto g = from_callable([](double t) { return 1.2 - t; }, 0.0, 0.25, grid);
    const auto pair = first_zero_pair(f, g, 0.5, 2);
    REQUIRE(pair.has_value());
    CHECK(pair->first == doctest::Approx(1.0));
    CHECK(pair->second == doctest::Approx(1.2));

    const auto same = first_zero_pair(f, f, 0.5, 2);
    REQUIRE(same.has_value());
    CHECK(same->first == same->second);

    const auto flat = from_callable([](double) { return 1.0; }, 1.0, 0.25, grid);
    CHECK(!first_zero_pair(f, flat, 0.5, 2).has_value());
    CHECK_THROWS_AS(locate_zeros(f, from_callable([](double) { return 1.0; }, 1.0, 0.25, build_grid(0, 3, 64)), 0.5, 2),
                    DomainError);
}
