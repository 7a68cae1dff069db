#include <doctest.h>

#include <cmath>
#include <random>

#include "conemom/errors.hpp"
#include "conemom/potential.hpp"

using namespace conemom;

namespace {

// Ricci-flat line-bundle profile (m=1, kappa=2, c=0): phi = (tau^2+2tau)/(1+tau),
// whose time, Kahler-potential, and symplectic columns all have closed forms
// once tau0 = sqrt(2)-1 makes t(tau) = (1/2) log((tau+1)^2 - 1).
Profile asymp_profile() {
    return build_profile({1, 2, 0, BoundaryPreset::bundle_smooth()});
}

PotentialOptions asymp_options() {
    PotentialOptions opt;
    opt.tau0_override = std::sqrt(2.0) - 1;
    return opt;
}

double closed_t(double tau) { return 0.5 * std::log((tau + 1) * (tau + 1) - 1); }
double closed_F(double tau, double tau0) {
    return tau - std::log(tau + 2) - (tau0 - std::log(tau0 + 2));
}

} // namespace

TEST_SUITE("potential") {

TEST_CASE("time vanishes at tau0 and matches the closed form on the asymptotic profile") {
    PotentialContext ctx(asymp_profile(), asymp_options());
    CHECK(ctx.time_of_tau(ctx.tau0()) == 0.0);
    CHECK(ctx.time_of_tau(std::sqrt(2.0) - 1) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(ctx.time_of_tau(1.0) == doctest::Approx(0.5 * std::log(3.0)).epsilon(1e-12));
    for (double tau : {0.2, 0.7, 2.0, 9.0})
        CHECK(ctx.time_of_tau(tau) == doctest::Approx(closed_t(tau)).epsilon(1e-11));
}

TEST_CASE("default anchor is the profile's own tau0") {
    Profile pr = asymp_profile();
    PotentialContext ctx(pr);
    CHECK(ctx.tau0() == to_double(pr.tau0()));
    CHECK(ctx.time_of_tau(ctx.tau0()) == 0.0);
}

TEST_CASE("reversing the anchor and the endpoint flips the sign of t") {
    Profile pr = asymp_profile();
    for (double tau : {0.3, 1.5, 4.0}) {
        PotentialOptions from_a;
        from_a.tau0_override = 0.8;
        PotentialOptions from_tau;
        from_tau.tau0_override = tau;
        double fwd = PotentialContext(pr, from_a).time_of_tau(tau);
        double bwd = PotentialContext(pr, from_tau).time_of_tau(0.8);
        CHECK(std::abs(fwd + bwd) <= 2e-12);
    }
}

TEST_CASE("tau arguments outside (0, b) are rejected") {
    PotentialContext ctx(asymp_profile());
    CHECK_THROWS_AS(ctx.time_of_tau(0.0), Error);
    CHECK_THROWS_AS(ctx.time_of_tau(-1.5), Error);
    CHECK_THROWS_AS(ctx.arclength_s(0.0), Error);

    // finite domain: (m=1, kappa=4, c=2, cone) has b = 3
    Profile finite = build_profile({1, 4, 2, BoundaryPreset::cone_smooth()});
    PotentialContext fin(finite);
    CHECK_NOTHROW(fin.time_of_tau(2.5));
    CHECK_THROWS_AS(fin.time_of_tau(3.0), Error);
    CHECK_THROWS_AS(fin.time_of_tau(17.0), Error);
    try {
        fin.time_of_tau(3.0);
    } catch (const Error& e) {
        CHECK(e.code() == errc::outside_domain);
    }
}

TEST_CASE("time inversion: exact anchor, closed-form value at t = 1, and round-trips") {
    PotentialContext ctx(asymp_profile(), asymp_options());
    CHECK(ctx.tau_of_time(0.0) == doctest::Approx(std::sqrt(2.0) - 1).epsilon(1e-12));
    CHECK(ctx.tau_of_time(1.0) ==
          doctest::Approx(std::sqrt(std::exp(2.0) + 1) - 1).epsilon(1e-11));

    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> pick(0.05, 6.0);
    for (int i = 0; i < 100; ++i) {
        double tau = pick(rng);
        CHECK(ctx.tau_of_time(ctx.time_of_tau(tau)) == doctest::Approx(tau).epsilon(1e-9));
    }
}

TEST_CASE("times outside (t1, t2) report OutsideRange") {
    // t2 finite: phi grows quadratically for (m=1, kappa=2, c=-3, cone)
    Profile quad = build_profile({1, 2, -3, BoundaryPreset::cone_smooth()});
    PotentialContext ctx(quad);
    CHECK_THROWS_AS(ctx.tau_of_time(50.0), Error);
    try {
        ctx.tau_of_time(50.0);
    } catch (const Error& e) {
        CHECK(e.code() == errc::outside_range);
    }

    // t1 finite: custom boundary with phi(0) = 1 keeps 1/phi integrable at 0
    Profile bounded = build_profile({1, 2, 0, BoundaryPreset::custom(1, 1)});
    PotentialContext bctx(bounded);
    // t(tau) = log((1+tau)/2) here, so t1 = -log 2
    CHECK(bctx.tau_of_time(-0.5) == doctest::Approx(2 * std::exp(-0.5) - 1).epsilon(1e-10));
    CHECK_THROWS_AS(bctx.tau_of_time(-10.0), Error);
    CHECK_THROWS_AS(bctx.tau_of_time(std::numeric_limits<double>::infinity()), Error);
}

TEST_CASE("Kahler potential: zero at t = 0, closed form, and derivative chain") {
    PotentialContext ctx(asymp_profile(), asymp_options());
    CHECK(ctx.kahler_potential_F(0.0) == doctest::Approx(0.0).epsilon(1e-12));
    double tau0 = std::sqrt(2.0) - 1;
    for (double tau : {0.5, 1.0, 2.5})
        CHECK(ctx.kahler_potential_F(closed_t(tau)) ==
              doctest::Approx(closed_F(tau, tau0)).epsilon(1e-11));

    // F'(t) = tau(t) and F''(t) = phi(tau(t)) by finite differences
    for (int i = 0; i < 50; ++i) {
        double t = -0.8 + 0.06 * i;
        double h = 1e-4;
        double fp = (ctx.kahler_potential_F(t + h) - ctx.kahler_potential_F(t - h)) / (2 * h);
        CHECK(fp == doctest::Approx(ctx.tau_of_time(t)).epsilon(1e-6));
    }
    for (int i = 0; i < 20; ++i) {
        double t = -0.5 + 0.1 * i;
        double h = 2e-3;
        double fpp = (ctx.kahler_potential_F(t + h) - 2 * ctx.kahler_potential_F(t) +
                      ctx.kahler_potential_F(t - h)) /
                     (h * h);
        double phi = to_double(asymp_profile().eval_phi(rational_from_double(ctx.tau_of_time(t))));
        CHECK(fpp == doctest::Approx(phi).epsilon(1e-5));
    }
}

TEST_CASE("arclength: zero at tau0, ds/dt = sqrt(phi), and log divergence at an order-2 zero") {
    PotentialContext ctx(asymp_profile(), asymp_options());
    CHECK(ctx.arclength_s(ctx.tau0()) == 0.0);

    for (int i = 1; i <= 50; ++i) {
        double tau = 0.2 + 0.1 * i;
        double h = 1e-4;
        double t = ctx.time_of_tau(tau);
        double ds = (ctx.arclength_s(ctx.tau_of_time(t + h)) -
                     ctx.arclength_s(ctx.tau_of_time(t - h))) /
                    (2 * h);
        double phi = to_double(asymp_profile().eval_phi(rational_from_double(tau)));
        CHECK(ds == doctest::Approx(std::sqrt(phi)).epsilon(1e-6));
    }

    // (m=1, kappa=4, c=0, cone): phi = 2 tau^2/(1+tau) vanishes to order 2,
    // so s(10^-k) marches to -infinity by about log(10)/sqrt(2) per decade.
    Profile cone = build_profile({1, 4, 0, BoundaryPreset::cone_smooth()});
    PotentialContext cctx(cone);
    double prev = cctx.arclength_s(1e-2);
    for (int k = 3; k <= 6; ++k) {
        double cur = cctx.arclength_s(std::pow(10.0, -k));
        CHECK(cur < prev);
        CHECK(prev - cur == doctest::Approx(std::log(10.0) / std::sqrt(2.0)).epsilon(0.02));
        prev = cur;
    }
}

TEST_CASE("symplectic potential: zero at tau0, G'' = 1/phi, Legendre duality") {
    PotentialContext ctx(asymp_profile(), asymp_options());
    CHECK(ctx.symplectic_potential_G(ctx.tau0()) == doctest::Approx(0.0).epsilon(1e-14));

    Profile pr = asymp_profile();
    for (int i = 1; i <= 50; ++i) {
        double tau = 0.3 + 0.08 * i;
        double h = 2e-3;
        double gpp = (ctx.symplectic_potential_G(tau + h) - 2 * ctx.symplectic_potential_G(tau) +
                      ctx.symplectic_potential_G(tau - h)) /
                     (h * h);
        double phi = to_double(pr.eval_phi(rational_from_double(tau)));
        CHECK(gpp == doctest::Approx(1.0 / phi).epsilon(1e-5));
    }

    // duality via independent recomputation of every term; the inversion
    // inside F contributes up to |tau| * abs_tol on top of 2 quadratures
    for (double tau : {0.5, 1.0, 2.0, 3.0}) {
        double G = ctx.symplectic_potential_G(tau);
        double t = ctx.time_of_tau(tau);
        double F = ctx.kahler_potential_F(t);
        CHECK(std::abs(G + F - tau * t) <= (3 + tau) * 1e-12);
    }
}

TEST_CASE("table: single anchor row is identically zero") {
    Profile pr = asymp_profile();
    PotentialContext ctx(pr);
    PotentialTable tab = ctx.build_table({ctx.tau0()});
    REQUIRE(tab.samples.size() == 1);
    CHECK(tab.samples[0].t == 0.0);
    CHECK(tab.samples[0].F == 0.0);
    CHECK(tab.samples[0].G == 0.0);
    CHECK(tab.samples[0].s == 0.0);
    CHECK(tab.tau0 == pr.tau0());
}

TEST_CASE("table columns: monotone t, convex F, duality, closed forms") {
    PotentialContext ctx(asymp_profile(), asymp_options());
    std::vector<double> grid;
    for (int i = 0; i < 200; ++i)
        grid.push_back(std::pow(10.0, -2.0 + 3.0 * i / 199.0));
    PotentialTable tab = ctx.build_table(grid);
    REQUIRE(tab.samples.size() == grid.size());
    CHECK(tab.quoted_error < 1e-9);

    double tau0 = std::sqrt(2.0) - 1;
    for (size_t i = 0; i < tab.samples.size(); ++i) {
        const PotentialSample& r = tab.samples[i];
        CHECK(r.t == doctest::Approx(closed_t(r.tau)).epsilon(1e-10));
        CHECK(r.F == doctest::Approx(closed_F(r.tau, tau0)).epsilon(1e-10));
        CHECK(r.G == doctest::Approx(r.tau * closed_t(r.tau) - closed_F(r.tau, tau0))
                         .epsilon(1e-10));
        CHECK(std::abs(r.G + r.F - r.tau * r.t) <= 1e-13); // definitional
        if (i > 0)
            CHECK(r.t > tab.samples[i - 1].t);
    }

    // slopes of F against t increase (F'' = phi > 0)
    for (size_t i = 2; i < tab.samples.size(); ++i) {
        const auto &a = tab.samples[i - 2], &b = tab.samples[i - 1], &c = tab.samples[i];
        double s1 = (b.F - a.F) / (b.t - a.t);
        double s2 = (c.F - b.F) / (c.t - b.t);
        CHECK(s2 - s1 > -1e-9);
    }

    // s column against a fresh tighter quadrature
    PotentialOptions tight = asymp_options();
    tight.abs_tol = 1e-14;
    PotentialContext tctx(asymp_profile(), tight);
    for (size_t i = 0; i < tab.samples.size(); i += 37)
        CHECK(tab.samples[i].s ==
              doctest::Approx(tctx.arclength_s(tab.samples[i].tau)).epsilon(1e-10));
}

TEST_CASE("table grids must be increasing and inside the domain") {
    PotentialContext ctx(asymp_profile());
    CHECK_THROWS_AS(ctx.build_table({}), Error);
    CHECK_THROWS_AS(ctx.build_table({1.0, 1.0}), Error);
    CHECK_THROWS_AS(ctx.build_table({2.0, 1.0}), Error);
    CHECK_THROWS_AS(ctx.build_table({-1.0, 1.0}), Error);

    Profile finite = build_profile({1, 4, 2, BoundaryPreset::cone_smooth()});
    CHECK_THROWS_AS(PotentialContext(finite).build_table({1.0, 2.0, 3.5}), Error);
}

TEST_CASE("halving the tolerance is self-consistent") {
    Profile pr = asymp_profile();
    PotentialOptions loose, tight;
    loose.abs_tol = 1e-10;
    tight.abs_tol = 5e-11;
    double a = PotentialContext(pr, loose).time_of_tau(5.0);
    double b = PotentialContext(pr, tight).time_of_tau(5.0);
    CHECK(std::abs(a - b) <= 1e-10);
}

TEST_CASE("identical table builds are bit-identical") {
    PotentialContext ctx(asymp_profile());
    std::vector<double> grid = {0.3, 0.9, 1.7, 4.2};
    PotentialTable t1 = ctx.build_table(grid);
    PotentialTable t2 = ctx.build_table(grid);
    for (size_t i = 0; i < grid.size(); ++i) {
        CHECK(t1.samples[i].t == t2.samples[i].t);
        CHECK(t1.samples[i].F == t2.samples[i].F);
        CHECK(t1.samples[i].s == t2.samples[i].s);
    }
}

} // TEST_SUITE
