#include <doctest.h>

#include <random>

#include "conemom/errors.hpp"
#include "conemom/lp.hpp"

using namespace conemom;

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& x) {
    Rational s(0);
    for (size_t i = 0; i < a.size(); ++i)
        s += a[i] * x[i];
    return s;
}

bool satisfies(const std::vector<Constraint>& cons, const std::vector<Rational>& x) {
    for (const Constraint& c : cons) {
        Rational v = dot(c.a, x);
        if (c.rel == Rel::le && !(v <= c.rhs))
            return false;
        if (c.rel == Rel::ge && !(v >= c.rhs))
            return false;
        if (c.rel == Rel::eq && v != c.rhs)
            return false;
    }
    return true;
}

} // namespace

TEST_SUITE("lp") {

TEST_CASE("no constraints is trivially feasible at the origin") {
    auto r = lp_feasible(3, {});
    REQUIRE(r.feasible);
    CHECK(r.point == std::vector<Rational>{0, 0, 0});
}

TEST_CASE("a contradictory pair is infeasible") {
    // x >= 1 and x <= 0
    std::vector<Constraint> cons = {{{Rational(1)}, Rel::ge, Rational(1)},
                                    {{Rational(1)}, Rel::le, Rational(0)}};
    CHECK_FALSE(lp_feasible(1, cons).feasible);
}

TEST_CASE("free variables may go negative") {
    // x <= -3 alone
    std::vector<Constraint> cons = {{{Rational(1)}, Rel::le, Rational(-3)}};
    auto r = lp_feasible(1, cons);
    REQUIRE(r.feasible);
    CHECK(r.point[0] <= -3);
    CHECK(satisfies(cons, r.point));
}

TEST_CASE("equalities are met exactly") {
    // x + y = 7/3, x - y = 1/3  =>  x = 4/3, y = 1
    std::vector<Constraint> cons = {
        {{Rational(1), Rational(1)}, Rel::eq, Rational(7, 3)},
        {{Rational(1), Rational(-1)}, Rel::eq, Rational(1, 3)},
    };
    auto r = lp_feasible(2, cons);
    REQUIRE(r.feasible);
    CHECK(r.point[0] == Rational(4, 3));
    CHECK(r.point[1] == Rational(1));
}

TEST_CASE("inconsistent equalities are infeasible") {
    std::vector<Constraint> cons = {
        {{Rational(1), Rational(1)}, Rel::eq, Rational(1)},
        {{Rational(2), Rational(2)}, Rel::eq, Rational(3)},
    };
    CHECK_FALSE(lp_feasible(2, cons).feasible);
}

TEST_CASE("strict cone interior via >= 1 rows") {
    // y with <y, e_i> >= 1: feasible for the standard cone
    std::vector<Constraint> cons = {
        {{Rational(1), Rational(0)}, Rel::ge, Rational(1)},
        {{Rational(0), Rational(1)}, Rel::ge, Rational(1)},
    };
    auto r = lp_feasible(2, cons);
    REQUIRE(r.feasible);
    CHECK(satisfies(cons, r.point));

    // adding the opposite normal (-1,0) empties the interior
    cons.push_back({{Rational(-1), Rational(0)}, Rel::ge, Rational(1)});
    CHECK_FALSE(lp_feasible(2, cons).feasible);
}

TEST_CASE("redundancy detection pattern from cone minimality") {
    // normals (1,0), (0,1), (1,1): y with <y,(1,1)> <= -1 and the others
    // >= 0 must fail, the same test against (1,0) must succeed.
    std::vector<Rational> l0 = {Rational(1), Rational(0)};
    std::vector<Rational> l1 = {Rational(0), Rational(1)};
    std::vector<Rational> l2 = {Rational(1), Rational(1)};
    std::vector<Constraint> redundant = {
        {l0, Rel::ge, Rational(0)}, {l1, Rel::ge, Rational(0)}, {l2, Rel::le, Rational(-1)}};
    CHECK_FALSE(lp_feasible(2, redundant).feasible);

    std::vector<Constraint> essential = {
        {l1, Rel::ge, Rational(0)}, {l2, Rel::ge, Rational(0)}, {l0, Rel::le, Rational(-1)}};
    auto r = lp_feasible(2, essential);
    REQUIRE(r.feasible);
    CHECK(satisfies(essential, r.point));
}

TEST_CASE("degenerate ties terminate under Bland's rule") {
    // Many constraints active at the same point; exercises tie-breaking.
    std::vector<Constraint> cons = {
        {{Rational(1), Rational(0)}, Rel::ge, Rational(0)},
        {{Rational(0), Rational(1)}, Rel::ge, Rational(0)},
        {{Rational(1), Rational(1)}, Rel::ge, Rational(0)},
        {{Rational(1), Rational(2)}, Rel::ge, Rational(0)},
        {{Rational(2), Rational(1)}, Rel::ge, Rational(0)},
        {{Rational(1), Rational(1)}, Rel::le, Rational(0)},
    };
    auto r = lp_feasible(2, cons);
    REQUIRE(r.feasible);
    CHECK(satisfies(cons, r.point));
    CHECK(dot({Rational(1), Rational(1)}, r.point) == 0);
}

TEST_CASE("random systems built around a known point are feasible with an exact witness") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> coef(-5, 5), den(1, 4), relpick(0, 2);
    for (int trial = 0; trial < 50; ++trial) {
        long n = 2 + trial % 4;
        std::vector<Rational> xstar(static_cast<size_t>(n));
        for (auto& v : xstar)
            v = Rational(coef(rng), den(rng));
        std::vector<Constraint> cons;
        for (int i = 0; i < 8; ++i) {
            Constraint c;
            c.a.resize(static_cast<size_t>(n));
            for (auto& v : c.a)
                v = Rational(coef(rng));
            Rational v = dot(c.a, xstar);
            int r = relpick(rng);
            c.rel = r == 0 ? Rel::le : (r == 1 ? Rel::ge : Rel::eq);
            c.rhs = c.rel == Rel::le ? v + Rational(den(rng)) : (c.rel == Rel::ge ? v - Rational(den(rng)) : v);
            cons.push_back(std::move(c));
        }
        auto res = lp_feasible(n, cons);
        REQUIRE(res.feasible);
        CHECK(satisfies(cons, res.point));
    }
}

TEST_CASE("dimension mismatches are rejected") {
    std::vector<Constraint> cons = {{{Rational(1)}, Rel::ge, Rational(0)}};
    CHECK_THROWS_AS(lp_feasible(2, cons), Error);
    CHECK_THROWS_AS(lp_feasible(0, {}), Error);
}

} // TEST_SUITE
