#include <cmath>

#include "doctest.h"
#include "dorod/errors.hpp"
#include "dorod/order_distribution.hpp"
#include "oracles/oracles.hpp"

using dorod::order_distribution;

namespace {

// four-decimal agreement with a reference entry
void check_4dp(double value, double table) { CHECK(std::abs(value - table) <= 5e-5); }

}  // namespace

TEST_CASE("density values and errors") {
    CHECK(order_distribution::uniform().density(0.3) == doctest::Approx(1.0));
    CHECK(order_distribution::linear().density(0.25) == doctest::Approx(0.5));
    CHECK(order_distribution::beta(2, 5).density(0.3) ==
          doctest::Approx(oracle::beta_pdf(0.3, 2, 5)).epsilon(1e-13));
    CHECK(order_distribution::truncnormal(0.9, 0.15).density(0.6) ==
          doctest::Approx(oracle::truncnorm_pdf(0.6, 0.9, 0.15)).epsilon(1e-13));
    CHECK_THROWS_AS(order_distribution::dirac(0.7).density(0.7), dorod::domain_error);
    CHECK_THROWS_AS(order_distribution::uniform().density(1.2), dorod::domain_error);
    CHECK_THROWS_AS(order_distribution::dirac(1.5), dorod::domain_error);
    CHECK_THROWS_AS(order_distribution::beta(0, 5), dorod::domain_error);
}

TEST_CASE("densities are non-negative on the unit interval") {
    for (const auto& d : {order_distribution::uniform(), order_distribution::linear(),
                          order_distribution::beta(2, 5), order_distribution::truncnormal(0.7, 0.5),
                          order_distribution::truncnormal(0.7, 0.25)})
        for (int k = 0; k <= 1000; ++k) CHECK(d.density(k / 1000.0) >= 0.0);
}

TEST_CASE("trapezoid weights sum to the interval length") {
    for (int na : {1, 7, 50, 100, 200}) {
        const auto d = order_distribution::uniform(na);
        double s = 0;
        for (double w : d.trapezoid_weights()) s += w * d.step();
        CHECK(s == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(d.nodes().front() == 0.0);
        CHECK(d.nodes().back() == 1.0);
    }
}

TEST_CASE("discrete normalization error is small and shrinks with n_alpha") {
    for (auto make : {+[](int n) { return order_distribution::uniform(n); },
                      +[](int n) { return order_distribution::linear(n); },
                      +[](int n) { return order_distribution::beta(2, 5, n); },
                      +[](int n) { return order_distribution::truncnormal(0.9, 0.15, n); },
                      +[](int n) { return order_distribution::truncnormal(0.7, 0.5, n); },
                      +[](int n) { return order_distribution::truncnormal(0.7, 0.25, n); }}) {
        double prev = 1.0;
        for (int na : {50, 100, 200}) {
            const double err = std::abs(make(na).discrete_mass() - 1.0);
            CHECK(err < 1e-3);
            // uniform and linear are integrated exactly; only roundoff remains
            CHECK((err <= prev || err < 1e-13));
            prev = err;
        }
    }
}

TEST_CASE("moments reproduce the reference central tendencies") {
    SUBCASE("uniform") {
        const auto m = dorod::moments(order_distribution::uniform());
        check_4dp(m.mean, 0.5);
        check_4dp(m.median, 0.5);
        CHECK_FALSE(m.mode.has_value());
        check_4dp(m.stddev, 0.2887);
    }
    SUBCASE("linear") {
        const auto m = dorod::moments(order_distribution::linear());
        check_4dp(m.mean, 0.6667);
        check_4dp(m.median, 0.7071);
        check_4dp(*m.mode, 1.0);
        check_4dp(m.stddev, 0.2357);
    }
    SUBCASE("beta") {
        const auto m = dorod::moments(order_distribution::beta(2, 5));
        check_4dp(m.mean, 0.2857);
        check_4dp(m.median, 0.2644);
        check_4dp(*m.mode, 0.2);
        check_4dp(m.stddev, 0.1597);
    }
    SUBCASE("truncnormal 0.9 / 0.15") {
        const auto m = dorod::moments(order_distribution::truncnormal(0.9, 0.15));
        check_4dp(m.mean, 0.8359);
        check_4dp(m.median, 0.8517);
        check_4dp(*m.mode, 0.9);
        check_4dp(m.stddev, 0.1095);
    }
    SUBCASE("truncnormal 0.7 / 0.25") {
        const auto m = dorod::moments(order_distribution::truncnormal(0.7, 0.25));
        check_4dp(m.mean, 0.6472);
        check_4dp(m.median, 0.6646);
        check_4dp(*m.mode, 0.7);
        check_4dp(m.stddev, 0.2041);
    }
    SUBCASE("dirac") {
        const auto m = dorod::moments(order_distribution::dirac(0.7));
        CHECK(m.mean == 0.7);
        CHECK(m.median == 0.7);
        CHECK(*m.mode == 0.7);
        CHECK(m.stddev == 0.0);
    }
}

TEST_CASE("moments agree with an adaptive-quadrature oracle") {
    struct item {
        order_distribution d;
        std::function<double(double)> pdf;
    };
    const std::vector<item> items = {
        {order_distribution::linear(), [](double x) { return 2 * x; }},
        {order_distribution::beta(2, 5), [](double x) { return oracle::beta_pdf(x, 2, 5); }},
        {order_distribution::truncnormal(0.7, 0.5),
         [](double x) { return oracle::truncnorm_pdf(x, 0.7, 0.5); }},
    };
    for (const auto& it : items) {
        const auto m = dorod::moments(it.d);
        const auto o = oracle::moments_of(it.pdf);
        CHECK(m.mean == doctest::Approx(o.mean).epsilon(1e-10));
        CHECK(m.median == doctest::Approx(o.median).epsilon(1e-9));
        CHECK(m.stddev == doctest::Approx(o.stddev).epsilon(1e-9));
    }
}

TEST_CASE("distributed quadrature") {
    auto one = [](double) { return 1.0; };
    CHECK(dorod::distributed_quadrature(order_distribution::uniform(), one) ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(dorod::distributed_quadrature(order_distribution::dirac(0.7),
                                        [](double a) { return std::exp(a); }) == std::exp(0.7));

    const auto b = order_distribution::beta(2, 5);
    const double q = dorod::distributed_quadrature(b, [](double a) { return a; });
    const double o = oracle::simpson([](double a) { return a * oracle::beta_pdf(a, 2, 5); }, 0, 1);
    CHECK(std::abs(q - o) < 1e-4);
    CHECK(std::abs(q - 0.2857) < 1e-3);

    for (const auto& d : {order_distribution::uniform(), order_distribution::linear(),
                          order_distribution::truncnormal(0.9, 0.15),
                          order_distribution::truncnormal(0.7, 0.5),
                          order_distribution::truncnormal(0.7, 0.25)}) {
        const auto m = dorod::moments(d);
        CHECK(std::abs(dorod::distributed_quadrature(d, [](double a) { return a; }) - m.mean) < 1e-3);
    }

    try {
        dorod::distributed_quadrature(order_distribution::uniform(4),
                                      [](double a) { return 1.0 / (1.0 - a); });
        FAIL("expected a singular integrand");
    } catch (const dorod::singular_integrand& e) {
        CHECK(e.alpha() == 1.0);
        CHECK(std::string(e.what()).find("alpha=1") != std::string::npos);
    }
}

TEST_CASE("strength functions singular at an end node are rejected") {
    CHECK_THROWS_AS(order_distribution::beta(0.5, 2), dorod::singular_integrand);
}

TEST_CASE("spec strings parse and round-trip") {
    for (const char* s : {"uniform", "linear", "beta a=2 b=5", "truncnormal loc=0.9 scale=0.15",
                          "dirac alpha=0.7"}) {
        const auto d = order_distribution::parse(s, 80);
        CHECK(d.spec() == s);
        CHECK(order_distribution::parse(d.spec(), 80) == d);
    }
    CHECK(order_distribution::parse("beta b=5 a=2") == order_distribution::beta(2, 5));
    CHECK_THROWS_AS(order_distribution::parse("beta a=2"), dorod::domain_error);
    CHECK_THROWS_AS(order_distribution::parse("beta a=2 b=5 c=1"), dorod::domain_error);
    CHECK_THROWS_AS(order_distribution::parse("gamma k=2"), dorod::domain_error);
    CHECK_THROWS_AS(order_distribution::parse("dirac alpha=x"), dorod::domain_error);
}
