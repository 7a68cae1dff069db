#include <doctest.h>

#include "conemom/errors.hpp"
#include "conemom/profile.hpp"
#include "oracles.hpp"

using namespace conemom;

namespace {

const std::vector<Rational> kKappas = {-3, -2, -1, 0, 1, 2, Rational(7, 3)};
const std::vector<Rational> kCs = {-4, -3, -2, -1, 0};

std::vector<BoundaryPreset> presets() {
    return {BoundaryPreset::cone_smooth(), BoundaryPreset::bundle_smooth(),
            BoundaryPreset::custom(Rational(1, 2), Rational(-2, 3))};
}

}  // namespace

TEST_SUITE("profile") {

TEST_CASE("cone-smooth example m=1 kappa=4 c=0") {
    Profile pr = build_profile({1, 4, 0, BoundaryPreset::cone_smooth()});
    CHECK(pr.c1() == -4);
    CHECK(pr.c2() == -2);
    CHECK(pr.numerator() == Poly({0, 0, 2}));  // 2τ²
    CHECK(pr.phi() == RationalFunction(Poly({0, 0, 2}), Poly({1, 1})));
    CHECK(pr.eval_phi(1) == 1);
    CHECK(pr.eval_phi(3) == Rational(18, 4));
}

TEST_CASE("bundle-smooth example m=1 kappa=2 c=0") {
    Profile pr = build_profile({1, 2, 0, BoundaryPreset::bundle_smooth()});
    CHECK(pr.numerator() == Poly({0, 2, 1}));  // τ² + 2τ
    CHECK(pr.phi() == RationalFunction(Poly({0, 2, 1}), Poly({1, 1})));
    CHECK(pr.eval_phi(1) == Rational(3, 2));
}

TEST_CASE("boundary conditions hold exactly for every preset") {
    for (long m : {1L, 2L, 3L, 5L})
        for (const Rational& kappa : kKappas)
            for (const Rational& c : {Rational(-2), Rational(0), Rational(3)})
                for (const BoundaryPreset& bc : presets()) {
                    Profile pr = build_profile({m, kappa, c, bc});
                    CHECK(pr.eval_phi(0) == bc.v0);
                    CHECK(pr.eval_phi_prime(0) == bc.v1);
                }
}

TEST_CASE("closed-form constants for the named presets") {
    for (long m : {1L, 2L, 4L})
        for (const Rational& kappa : kKappas)
            for (const Rational& c : kCs) {
                Rational c2 = -kappa / (m + 1) + c / ((m + 1) * Rational(m + 2));
                Profile cone = build_profile({m, kappa, c, BoundaryPreset::cone_smooth()});
                CHECK(cone.c1() == -kappa + c / (m + 1));
                CHECK(cone.c2() == c2);
                Profile bun = build_profile({m, kappa, c, BoundaryPreset::bundle_smooth()});
                CHECK(bun.c1() == c / (m + 1) + 2 - kappa);
                CHECK(bun.c2() == c2);
            }
}

TEST_CASE("numerator identity and degree bookkeeping") {
    for (long m : {1L, 2L, 3L})
        for (const Rational& kappa : {Rational(0), Rational(-2), Rational(5, 2)})
            for (const Rational& c : {Rational(0), Rational(-1), Rational(2)})
                for (const BoundaryPreset& bc : presets()) {
                    Profile pr = build_profile({m, kappa, c, bc});
                    Poly expect = (kappa / (m + 1)) * Poly::one_plus_x_pow(m + 1) -
                                  (c / ((m + 1) * Rational(m + 2))) * Poly::one_plus_x_pow(m + 2) +
                                  Poly({pr.c2(), pr.c1()});
                    CHECK(pr.numerator() == expect);
                    if (c != 0)
                        CHECK(pr.numerator().degree() == m + 2);
                    else if (kappa != 0)
                        CHECK(pr.numerator().degree() == m + 1);
                    else
                        CHECK(pr.numerator().degree() <= 1);
                }
}

TEST_CASE("construction satisfies the curvature ODE as a polynomial identity") {
    for (long m : {1L, 2L, 3L, 4L, 5L})
        for (const Rational& kappa : kKappas)
            for (const Rational& c : kCs)
                for (const BoundaryPreset& bc : presets()) {
                    Profile pr = build_profile({m, kappa, c, bc});
                    Poly lhs = pr.numerator().derivative().derivative();
                    Poly rhs = (m * kappa) * Poly::one_plus_x_pow(m - 1) -
                               c * Poly::one_plus_x_pow(m);
                    CHECK(lhs == rhs);
                }
}

TEST_CASE("positivity domain is the whole half-line for the scalar-flat families") {
    SUBCASE("named examples") {
        CHECK(build_profile({1, 4, 0, BoundaryPreset::cone_smooth()})
                  .positivity_domain().infinite);
        CHECK(build_profile({1, 2, 0, BoundaryPreset::bundle_smooth()})
                  .positivity_domain().infinite);
    }
    SUBCASE("cone kappa = 2m+2 with c <= 0") {
        for (long m : {1L, 2L, 3L})
            for (const Rational& c : kCs) {
                Profile pr = build_profile({m, 2 * m + 2, c, BoundaryPreset::cone_smooth()});
                CHECK(pr.positivity_domain().infinite);
            }
    }
    SUBCASE("bundle kappa = 2p/k > 0 with c <= 0") {
        for (const Rational& kappa : {Rational(2), Rational(1), Rational(2, 3)})
            for (const Rational& c : kCs)
                for (long m : {1L, 2L}) {
                    Profile pr = build_profile({m, kappa, c, BoundaryPreset::bundle_smooth()});
                    CHECK(pr.positivity_domain().infinite);
                }
    }
}

TEST_CASE("sturm verdict agrees with a dense sign-scan oracle") {
    for (long m : {1L, 2L})
        for (const Rational& kappa : {Rational(-2), Rational(0), Rational(4)})
            for (const Rational& c : {Rational(-10), Rational(0), Rational(2)})
                for (const BoundaryPreset& bc :
                     {BoundaryPreset::cone_smooth(), BoundaryPreset::bundle_smooth()}) {
                    Profile pr = build_profile({m, kappa, c, bc});
                    if (pr.numerator().is_zero()) continue;
                    long sturm = sturm_count_above(pr.numerator(), 0);
                    long scanned =
                        oracle::sign_scan_roots(pr.numerator(), 1e-6, 1e6, 20000);
                    CHECK(sturm >= scanned);
                    if (sturm <= 1) CHECK(sturm == scanned);
                }
}

TEST_CASE("exact sign sampling at 1e4 rational points matches sturm on (0, 1e6)") {
    Profile pr = build_profile({1, -2, -10, BoundaryPreset::cone_smooth()});
    const Poly& P = pr.numerator();
    long flips = 0;
    int prev = 0;
    for (long i = 1; i <= 10000; ++i) {
        int s = sign(P.eval(Rational(i * 100)));
        if (s != 0 && prev != 0 && s != prev) ++flips;
        if (s != 0) prev = s;
    }
    CHECK(sturm_count(P, 0, 1000000) == flips);
}

TEST_CASE("large positive c forces a sign violation near zero") {
    Profile pr = build_profile({1, 4, 10, BoundaryPreset::cone_smooth()});
    CHECK_THROWS_AS(pr.positivity_domain(), Error);
    try {
        pr.positivity_domain();
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_positive_near_zero);
    }
}

TEST_CASE("moderate positive c gives a finite domain end") {
    Profile pr = build_profile({1, 4, 2, BoundaryPreset::cone_smooth()});
    CHECK(pr.numerator() == Poly({0, 0, 1, Rational(-1, 3)}));  // τ² − τ³/3
    PositivityDomain dom = pr.positivity_domain();
    REQUIRE_FALSE(dom.infinite);
    CHECK(dom.b.lo <= 3);
    CHECK(dom.b.hi >= 3);
    CHECK(pr.tau0() > 0);
    CHECK(pr.tau0() < 3);
    CHECK(pr.domain_hi() == doctest::Approx(3.0));
}

TEST_CASE("tau0 defaults") {
    CHECK(build_profile({2, 6, 0, BoundaryPreset::cone_smooth()}).tau0() == 1);
    Profile finite = build_profile({1, 4, 2, BoundaryPreset::cone_smooth()});
    PositivityDomain dom = finite.positivity_domain();
    CHECK(finite.tau0() == dom.b.lo / 2);
}

TEST_CASE("evaluation left of the pole is rejected") {
    Profile pr = build_profile({1, 4, 0, BoundaryPreset::cone_smooth()});
    CHECK_THROWS_AS(pr.eval_phi(-1), Error);
    CHECK_THROWS_AS(pr.eval_phi(Rational(-3, 2)), Error);
    CHECK_THROWS_AS(pr.eval_phi_prime(-2), Error);
    try {
        pr.eval_phi(-1);
    } catch (const Error& e) {
        CHECK(e.code() == errc::pole_at_minus_one);
    }
    CHECK(pr.eval_phi(Rational(-1, 2)) == 1);  // 2·(1/4)/(1/2)
}

TEST_CASE("identically zero profile is flagged as degenerate") {
    Profile pr = build_profile({1, 0, 0, BoundaryPreset::cone_smooth()});
    CHECK(pr.numerator().is_zero());
    try {
        pr.positivity_domain();
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::degenerate_profile);
    }
}

TEST_CASE("custom preset validation") {
    CHECK_THROWS_AS(BoundaryPreset::custom(-1, 0), Error);
    CHECK_THROWS_AS(build_profile({1, 1, 0, {BoundaryTag::custom, -1, 0}}), Error);
    Profile pr = build_profile({1, 2, 0, BoundaryPreset::custom(0, 1)});
    CHECK(pr.numerator() == Poly({0, 1, 1}));  // τ² + τ, i.e. φ = τ
    CHECK(pr.eval_phi(5) == 5);
}

TEST_CASE("phi and phi_prime agree with the rational-function forms") {
    for (const BoundaryPreset& bc : presets()) {
        Profile pr = build_profile({2, Rational(5, 2), -3, bc});
        RationalFunction phi = pr.phi();
        RationalFunction dphi = pr.phi_prime();
        for (const Rational& tau : {Rational(0), Rational(1, 3), Rational(7, 2), Rational(40)}) {
            CHECK(pr.eval_phi(tau) == phi.eval(tau));
            CHECK(pr.eval_phi_prime(tau) == dphi.eval(tau));
        }
    }
}

}  // TEST_SUITE
