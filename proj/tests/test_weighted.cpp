#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fitefrac/error.hpp"
#include "fitefrac/weighted.hpp"

using namespace fitefrac;

TEST_CASE("order range") {
    CHECK(Order(0.75).gamma() == doctest::Approx(0.25));
    CHECK_THROWS_AS(Order(0.5), DomainError);
    CHECK_THROWS_AS(Order(1.0), DomainError);
    CHECK_THROWS_AS(Order(0.3), DomainError);
}

TEST_CASE("grid construction") {
    const auto g1 = build_grid(0, 1, 2, 1);
    CHECK(g1.size() == 3);
    CHECK(g1.node(1) == 0.5);
    const auto g2 = build_grid(0, 1, 2, 2);
    CHECK(g2.node(1) == 0.25);
    const auto g3 = build_grid(1, 3, 4, 2);
    const double want[] = {1, 1.125, 1.5, 2.125, 3};
    for (int j = 0; j < 5; ++j) CHECK(g3.node(j) == doctest::Approx(want[j]).epsilon(1e-15));
    CHECK(g3.node(0) == 1.0);
    CHECK(g3.node(4) == 3.0);

    CHECK_THROWS_AS(build_grid(1, 1, 4), DomainError);
    CHECK_THROWS_AS(build_grid(2, 1, 4), DomainError);
    CHECK_THROWS_AS(build_grid(0, 1, 1), DomainError);
    CHECK_THROWS_AS(build_grid(0, 1, 4, 0.5), DomainError);
}

TEST_CASE("grid nodes strictly increase") {
    const auto g = build_grid(-2, 7, 1024, 2.5);
    for (std::size_t j = 1; j < g.size(); ++j) CHECK(g.node(j) > g.node(j - 1));
    CHECK(g.cell_of(g.node(17) + 1e-9) == 17);
}

TEST_CASE("from_callable samples") {
    const auto grid = build_grid(0, 1, 64);
    const double gamma = 0.25;
    const auto one = from_callable([](double) { return 1.0; }, 1.0, gamma, grid);
    for (double v : one.reg()) CHECK(v == 1.0);
    CHECK(one.norm_full() == 1.0);
    CHECK(one.norm_window(0.3, 0.9) == 1.0);
    CHECK(one.eval_raw(0.4) == doctest::Approx(std::pow(0.4, -gamma)).epsilon(1e-14));
    CHECK_THROWS_AS(one.eval_raw(0.0), DomainError);
    CHECK_THROWS_AS(one.eval_raw(1.5), DomainError);

    const auto smooth = from_callable([&](double t) { return std::pow(t, gamma); }, 0.0, gamma, grid);
    CHECK(smooth.f_a() == 0.0);
    CHECK(smooth.reg(5) == doctest::Approx(std::pow(grid.node(5), gamma)));
    CHECK(smooth.norm_full() == doctest::Approx(1.0));
    // 0.5 is not a node; the interpolant sits slightly below the concave weight.
    CHECK(smooth.norm_window(0.1, 0.5) == doctest::Approx(std::pow(0.5, gamma)).epsilon(1e-4));

    CHECK_THROWS_AS(from_callable([](double) { return NAN; }, 0.0, gamma, grid), DomainError);
}

TEST_CASE("norm_window of a sine bump") {
    const auto grid = build_grid(0, 1, 1024, 1);
    const auto w = from_callable([](double t) { return std::sin(std::numbers::pi * t); }, 0.0, 0.25, grid);
    CHECK(w.norm_window(0.4, 0.6) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(w.norm_window(0.0, 0.5), DomainError);
    CHECK_THROWS_AS(w.norm_window(0.6, 0.4), DomainError);
}

TEST_CASE("norm relations") {
    const auto grid = build_grid(0, 3, 256);
    const auto w = from_callable([](double t) { return std::cos(3 * t) * std::exp(-t); }, 1.0, 0.3, grid);
    CHECK(std::abs(w.f_a()) <= w.norm_full());
    double prev = 0.0;
    for (double c_w = 0.2; c_w <= 3.0; c_w += 0.1) {
        const double nw = w.norm_window(0.1, c_w);
        CHECK(nw <= w.norm_full());
        CHECK(nw >= prev);
        prev = nw;
    }
}

TEST_CASE("interpolation converges at second order") {
    const double gamma = 0.25;
    auto err = [&](std::size_t n) {
        const auto grid = build_grid(0, 1, n);
        const auto w = from_callable([&](double t) { return std::pow(t, gamma) * std::sin(t); }, 0.0, gamma, grid);
        double e = 0.0;
        for (double t = 0.05; t < 1.0; t += 0.0137) e = std::max(e, std::abs(w.eval_raw(t) - std::sin(t)));
        return e;
    };
    const double ratio = err(128) / err(256);
    CHECK(ratio > 3.0);
}

TEST_CASE("reg_distance") {
    const auto grid = build_grid(0, 1, 16);
    const auto a = from_callable([](double) { return 1.0; }, 1.0, 0.25, grid);
    const auto b = from_callable([](double t) { return 1.0 + t; }, 1.0, 0.25, grid);
    CHECK(reg_distance(a, b) == doctest::Approx(1.0));
    const auto other = from_callable([](double) { return 1.0; }, 1.0, 0.25, build_grid(0, 1, 32));
    CHECK_THROWS_AS(reg_distance(a, other), DomainError);
}
