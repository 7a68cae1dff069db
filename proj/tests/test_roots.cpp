#include "conemom/roots.hpp"
#include "conemom/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace conemom;

TEST_SUITE("roots") {

TEST_CASE("counts on a polynomial with known roots") {
    // (x-1)(x-2)^2(x+3): distinct roots -3, 1, 2 with multiplicities 1,1,2
    Poly p = oracle::poly_with_roots({Rational(1), Rational(2), Rational(2), Rational(-3)});

    CHECK(sturm_count(p, Rational(0), Rational(10)) == 2);
    CHECK(sturm_count(p, Rational(1), Rational(2)) == 0);   // open interval
    CHECK(sturm_count(p, Rational(1, 2), Rational(3)) == 2);
    CHECK(sturm_count(p, Rational(-10), Rational(10)) == 3);
    CHECK(sturm_count_above(p, Rational(0)) == 2);
    CHECK(sturm_count_above(p, Rational(3, 2)) == 1);
    CHECK(sturm_count_above(p, Rational(2)) == 0);
    CHECK(sturm_count_above(p, Rational(-5)) == 3);

    CHECK(root_order_at(p, Rational(2)) == 2);
    CHECK(root_order_at(p, Rational(1)) == 1);
    CHECK(root_order_at(p, Rational(-3)) == 1);
    CHECK(root_order_at(p, Rational(5)) == 0);
}

TEST_CASE("sturm counts agree with dense sign scans") {
    // Distinct integer roots separated by >= 1, so a fine scan is exact.
    std::mt19937 rng(21);
    std::uniform_int_distribution<int> root(-5, 5);
    for (int it = 0; it < 30; ++it) {
        std::vector<Rational> roots;
        std::vector<int> used;
        int k = 1 + it % 4;
        while (static_cast<int>(roots.size()) < k) {
            int r = root(rng);
            bool fresh = true;
            for (int u : used)
                if (u == r)
                    fresh = false;
            if (fresh) {
                used.push_back(r);
                roots.emplace_back(r);
            }
        }
        Poly p = oracle::poly_with_roots(roots);
        long sturm = sturm_count(p, Rational(-6), Rational(6));
        int scan = oracle::sign_scan_roots(p, -5.75, 5.75, 4000);
        CHECK(sturm == scan);
        CHECK(sturm == k);
    }
}

TEST_CASE("endpoint roots are excluded by deflation") {
    Poly p = oracle::poly_with_roots({Rational(0), Rational(0), Rational(1)});
    CHECK(sturm_count(p, Rational(0), Rational(2)) == 1);
    CHECK(sturm_count(p, Rational(0), Rational(1)) == 0);
    CHECK(sturm_count_above(p, Rational(0)) == 1);
    CHECK(sturm_count_above(p, Rational(1)) == 0);
}

TEST_CASE("cauchy bound traps every root") {
    std::mt19937 rng(22);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (int it = 0; it < 30; ++it) {
        std::vector<Rational> c(5);
        for (auto& a : c)
            a = Rational(coef(rng));
        Poly p(std::move(c));
        if (p.degree() < 1)
            continue;
        Rational B = cauchy_root_bound(p);
        CHECK(sturm_count_above(p, B) == 0);
        CHECK(sturm_count_above(-p, B) == 0);
        // reflected: roots below -B are roots of p(-x) above B
        std::vector<Rational> rc;
        for (int i = 0; i <= p.degree(); ++i)
            rc.push_back((i % 2) ? Rational(-p[i]) : p[i]);
        CHECK(sturm_count_above(Poly(std::move(rc)), B) == 0);
    }
}

TEST_CASE("smallest positive root isolation") {
    // roots at 1/2 (simple) and 7
    Poly p = oracle::poly_with_roots({Rational(1, 2), Rational(7)});
    auto iso = smallest_positive_root(p);
    REQUIRE(iso.has_value());
    CHECK(iso->lo > 0);
    CHECK(iso->lo <= Rational(1, 2));
    CHECK(iso->hi >= Rational(1, 2));
    if (!iso->is_point())
        CHECK(iso->width() <= pow2(-64));
    CHECK(multiplicity_in(p, *iso) == 1);

    // root at zero does not count as positive
    Poly q = oracle::poly_with_roots({Rational(0), Rational(-2)});
    CHECK(!smallest_positive_root(q).has_value());

    // no real roots at all
    Poly none{Rational(1), Rational(0), Rational(1)}; // x^2 + 1
    CHECK(!smallest_positive_root(none).has_value());
}

TEST_CASE("isolation skips clustered larger roots") {
    // smallest root 1, then a tight pair at 3/2 and 3/2 + 2^-70
    Rational eps = pow2(-70);
    Poly p = oracle::poly_with_roots({Rational(1), Rational(3, 2), Rational(3, 2) + eps});
    auto iso = smallest_positive_root(p);
    REQUIRE(iso.has_value());
    CHECK(iso->lo <= Rational(1));
    CHECK(iso->hi >= Rational(1));
    CHECK(iso->hi < Rational(3, 2));
    CHECK(multiplicity_in(p, *iso) == 1);
}

TEST_CASE("multiplicity of an isolated multiple root") {
    Poly p = oracle::poly_with_roots(
        {Rational(3, 4), Rational(3, 4), Rational(3, 4), Rational(9)});
    auto iso = smallest_positive_root(p);
    REQUIRE(iso.has_value());
    CHECK(multiplicity_in(p, *iso) == 3);

    // exact point interval
    CHECK(multiplicity_in(p, RootInterval{Rational(3, 4), Rational(3, 4)}) == 3);
    CHECK(multiplicity_in(p, RootInterval{Rational(9), Rational(9)}) == 1);
}

TEST_CASE("degenerate inputs throw") {
    CHECK_THROWS_AS(sturm_count(Poly(), Rational(0), Rational(1)), Error);
    CHECK_THROWS_AS(sturm_count(Poly{Rational(1)}, Rational(1), Rational(1)), Error);
    CHECK_THROWS_AS(root_order_at(Poly(), Rational(0)), Error);
    CHECK_THROWS_AS(smallest_positive_root(Poly()), Error);
}

} // TEST_SUITE
