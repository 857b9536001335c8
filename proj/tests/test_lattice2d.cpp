#include <cmath>
#include <random>

#include "doctest.h"
#include "dorod/lattice2d.hpp"
#include "dorod/errors.hpp"
#include "oracles/oracles.hpp"

using namespace dorod;

namespace {

const double pi = 3.141592653589793;
const strength_fn flat = [](double) { return 1.0; };

// 2 int_0^inf (1 - cos(k s)) / s^(2+a) ds by direct quadrature
double kernel_integral(double a, double k) {
    // s = t^4 removes the s^(-a) singularity at the origin
    auto near = [&](double t) {
        if (t == 0) return 0.0;
        const double s = t * t * t * t;
        const double h = std::sin(0.5 * k * s);
        return 2 * h * h * std::pow(s, -2 - a) * 4 * t * t * t;
    };
    auto far = [&](double s) {
        const double h = std::sin(0.5 * k * s);
        return 2 * h * h * std::pow(s, -2 - a);
    };
    double sum = oracle::simpson(near, 0, 1, 1e-11);
    const double S = 400;
    for (int j = 1; j < S; ++j) sum += oracle::simpson(far, j, j + 1, 1e-11);
    sum += std::pow(S, -1 - a) / (1 + a);
    return 2 * sum;
}

}  // namespace

TEST_CASE("pair force") {
    const layered_lattice one(0.5, 2.0, flat, 0.4, 0.6, 1, 10);
    REQUIRE(one.layers().size() == 1);
    const double a0 = one.layers()[0].alpha;
    CHECK(a0 == doctest::Approx(0.5));
    const double f0 = one.layers()[0].f0;
    CHECK(f0 == doctest::Approx(2.0 * 0.5 * 1.0 * 0.2));

    CHECK(pair_force(one, 0, 3, 7, [](double) { return 1.3; }) == 0.0);
    // unit displacement difference across a separation of 2
    const field_fn step = [](double x) { return x < 1 ? 1.0 : 0.0; };
    CHECK(pair_force(one, 0, 0, 4, step) == doctest::Approx(f0 * std::pow(2.0, -(2 + a0))));
    const field_fn ramp = [](double x) { return x < 1e-12 ? 1.0 : 0.0; };
    const double near = pair_force(one, 0, 0, 2, ramp), far = pair_force(one, 0, 0, 4, ramp);
    CHECK(far / near == doctest::Approx(std::pow(2.0, -(2 + a0))));
    CHECK_THROWS_AS(pair_force(one, 0, 3, 3, ramp), domain_error);
}

TEST_CASE("Newton's third law and linearity") {
    const layered_lattice lat(0.05, 1.0, [](double a) { return 2 * a; }, 0.1, 0.9, 5, 3);
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> U(-1, 1);
    const double c1 = U(rng), c2 = U(rng), c3 = U(rng);
    const field_fn u = [&](double x) { return c1 * std::sin(3 * x) + c2 * x * x + c3; };
    const field_fn v = [&](double x) { return std::cos(x); };
    const field_fn w = [&](double x) { return 2.5 * u(x) - 0.5 * v(x); };
    for (int r = 0; r < 5; ++r)
        for (long p = -3; p <= 3; ++p)
            for (long q = -3; q <= 3; ++q)
                if (p != q) CHECK(pair_force(lat, r, p, q, u) == doctest::Approx(-pair_force(lat, r, q, p, u)));
    for (long p = -5; p <= 5; ++p) {
        const double fw = homogenized_force(lat, p, w);
        const double fl = 2.5 * homogenized_force(lat, p, u) - 0.5 * homogenized_force(lat, p, v);
        CHECK(fw == doctest::Approx(fl).epsilon(1e-12).scale(1));
    }
}

TEST_CASE("homogenized force of a constant field vanishes") {
    const layered_lattice lat(0.02, 1.0, flat, 0.25, 0.75, 8, 5);
    for (long p = -10; p <= 10; ++p) CHECK(homogenized_force(lat, p, [](double) { return 4.0; }) == 0.0);
}

TEST_CASE("a single layer is the constant-order lattice sum") {
    const layered_lattice lat(0.1, 3.0, flat, 0.3, 0.5, 1, 2);
    const double a = 0.4, f0 = 3.0 * 0.1 * 0.2;
    const field_fn u = [](double x) { return std::exp(x); };
    double ref = 0;
    for (long q = -20; q <= 20; ++q)
        if (q != 0) ref += f0 * (u(0) - u(q * 0.1)) / std::pow(std::abs(q * 0.1), 2 + a);
    CHECK(lat.window() == 20);
    CHECK(homogenized_force(lat, 0, u) == doctest::Approx(ref).epsilon(1e-13));
}

TEST_CASE("closed-form operator matches direct kernel integration") {
    const double k = pi, x = 0.3;
    for (double a : {0.25, 0.5, 0.75}) {
        const double ref = std::sin(k * x) * kernel_integral(a, k);
        CHECK(do_operator_sine(1.0, flat, a - 1e-7, a + 1e-7, x, k) / 2e-7 ==
              doctest::Approx(ref).epsilon(1e-5));
    }
    // order integral with a linear strength, composite Simpson over the kernel oracle
    const strength_fn lin = [](double a) { return 2 * a; };
    const int m = 20;
    double ref = 0;
    for (int j = 0; j <= m; ++j) {
        const double a = 0.25 + 0.5 * j / m;
        const double wj = (j == 0 || j == m) ? 1 : (j % 2 ? 4 : 2);
        ref += wj * lin(a) * kernel_integral(a, k);
    }
    ref *= 0.5 / m / 3 * std::sin(k * x) * 1.5;
    CHECK(do_operator_sine(1.5, lin, 0.25, 0.75, x, k) == doctest::Approx(ref).epsilon(1e-5));
}

TEST_CASE("truncation estimate bounds the dropped tail") {
    const layered_lattice lat(0.05, 1.0, flat, 0.25, 0.75, 4, 2);
    // a field that is 1 at the origin and 0 elsewhere makes the tail an explicit sum
    double tail = 0;
    for (const auto& layer : lat.layers())
        for (long q = lat.window() + 1; q < 2000000; ++q)
            tail += 2 * layer.f0 / std::pow(q * lat.dx(), 2 + layer.alpha);
    CHECK(tail <= lat.truncation_estimate(1.0));
    CHECK(lat.truncation_estimate(1.0) < 10 * tail);
}

TEST_CASE("convergence to the distributed-order operator") {
    convergence_setup s;
    SUBCASE("joint refinement") {
        const auto rows = convergence_study(s, {{0.04, 4}, {0.02, 8}, {0.01, 16}, {0.005, 32}});
        for (std::size_t k = 1; k < rows.size(); ++k) CHECK(rows[k].rel_error < rows[k - 1].rel_error);
    }
    SUBCASE("halving the order step at fine spacing") {
        const auto rows = convergence_study(s, {{0.0025, 2}, {0.0025, 4}, {0.0025, 8}});
        for (std::size_t k = 1; k < rows.size(); ++k) CHECK(rows[k].rel_error < rows[k - 1].rel_error);
    }
    SUBCASE("halving the spacing at fine order step") {
        const auto rows = convergence_study(s, {{0.04, 64}, {0.02, 64}, {0.01, 64}});
        for (std::size_t k = 1; k < rows.size(); ++k) CHECK(rows[k].rel_error < rows[k - 1].rel_error);
    }
    SUBCASE("zero field") {
        s.amplitude = 0;
        const auto rows = convergence_study(s, {{0.04, 4}});
        CHECK(rows[0].lattice == 0.0);
        CHECK(rows[0].reference == 0.0);
        CHECK(rows[0].rel_error == 0.0);
    }
}
