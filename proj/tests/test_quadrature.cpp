#include <doctest.h>

#include <cmath>

#include "conemom/errors.hpp"
#include "conemom/quadrature.hpp"

using namespace conemom;

TEST_SUITE("quadrature") {

TEST_CASE("low-degree polynomials are exact in a single panel") {
    // the embedded Gauss rule is exact through degree 13
    auto f = [](double x) { return ((3 * x - 2) * x + 1) * x * x * x; };
    QuadratureResult r = integrate(f, 0.0, 1.0);
    // antiderivative: x^6/2 - 2 x^5/5 + x^4/4
    CHECK(r.value == doctest::Approx(0.5 - 0.4 + 0.25).epsilon(1e-15));
    CHECK(r.intervals == 1);

    auto deg13 = [](double x) { return 14 * std::pow(x, 13); };
    CHECK(integrate(deg13, 0.0, 1.0).value == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("classic closed forms at tight tolerance") {
    QuadratureOptions opt;
    opt.abs_tol = 1e-13;
    CHECK(integrate([](double x) { return std::sin(x); }, 0.0, M_PI, opt).value ==
          doctest::Approx(2.0).epsilon(1e-13));
    CHECK(integrate([](double x) { return 1.0 / (1.0 + x * x); }, 0.0, 1.0, opt).value ==
          doctest::Approx(M_PI / 4).epsilon(1e-13));
    CHECK(integrate([](double x) { return std::exp(-x); }, 0.0, 50.0, opt).value ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("orientation and the empty interval") {
    auto f = [](double x) { return x * x; };
    CHECK(integrate(f, 2.0, 2.0).value == 0.0);
    double fwd = integrate(f, 0.0, 2.0).value;
    double rev = integrate(f, 2.0, 0.0).value;
    CHECK(fwd == doctest::Approx(8.0 / 3).epsilon(1e-14));
    CHECK(fwd == -rev);
}

TEST_CASE("endpoint singularities integrate because nodes are interior") {
    // int_0^1 log x dx = -1, int_0^1 1/sqrt(x) dx = 2
    QuadratureResult r = integrate([](double x) { return std::log(x); }, 0.0, 1.0);
    CHECK(r.value == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(r.intervals > 1);
    r = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, {1e-10, 4096});
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("the reported error bound is honest on hard integrands") {
    for (double tol : {1e-8, 1e-10, 1e-12}) {
        QuadratureResult r =
            integrate([](double x) { return std::cos(50 * x); }, 0.0, 1.0, {tol, 4096});
        CHECK(std::abs(r.value - std::sin(50.0) / 50.0) <= std::max(r.error, 1e-15));
    }
}

TEST_CASE("halving the tolerance moves the value by less than the quoted error") {
    auto f = [](double x) { return std::sqrt(std::abs(x - 0.3)); };
    double tol = 1e-6;
    QuadratureResult coarse = integrate(f, 0.0, 1.0, {tol, 4096});
    QuadratureResult fine = integrate(f, 0.0, 1.0, {tol / 2, 4096});
    CHECK(std::abs(coarse.value - fine.value) <= coarse.error + fine.error);
}

TEST_CASE("budget exhaustion is reported") {
    QuadratureOptions opt;
    opt.abs_tol = 1e-14;
    opt.max_intervals = 4;
    CHECK_THROWS_AS(integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, opt), Error);
    try {
        integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, opt);
    } catch (const Error& e) {
        CHECK(e.code() == errc::quadrature_budget_exceeded);
    }
}

TEST_CASE("invalid requests are rejected") {
    auto f = [](double x) { return x; };
    CHECK_THROWS_AS(integrate(f, 0.0, std::numeric_limits<double>::infinity()), Error);
    CHECK_THROWS_AS(integrate(f, 0.0, 1.0, {0.0, 100}), Error);
    CHECK_THROWS_AS(integrate(f, 0.0, 1.0, {1e-12, 0}), Error);
    CHECK_THROWS_AS(integrate([](double) { return std::numeric_limits<double>::quiet_NaN(); },
                              0.0, 1.0),
                    Error);
}

TEST_CASE("determinism: identical runs produce identical bits") {
    auto f = [](double x) { return std::sin(1.0 / (x + 0.01)); };
    QuadratureResult a = integrate(f, 0.0, 1.0, {1e-11, 4096});
    QuadratureResult b = integrate(f, 0.0, 1.0, {1e-11, 4096});
    CHECK(a.value == b.value);
    CHECK(a.intervals == b.intervals);
}

} // TEST_SUITE
