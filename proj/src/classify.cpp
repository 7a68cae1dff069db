#include "conemom/classify.hpp"

#include <algorithm>
#include <limits>

#include "conemom/errors.hpp"
#include "conemom/rational_function.hpp"

namespace conemom {

EndpointBehavior endpoint_behavior(const Profile& pr) {
    PositivityDomain dom = pr.positivity_domain();
    const Poly& P = pr.numerator();
    EndpointBehavior eb;
    eb.order_at_zero = root_order_at(P, 0);
    eb.t1_infinite = eb.order_at_zero >= 1;
    eb.s_complete_at_zero = eb.order_at_zero >= 2;
    if (dom.infinite) {
        eb.b_infinite = true;
        eb.growth_degree = P.degree() - pr.m();
        eb.t2_infinite = eb.growth_degree <= 1;
        eb.s_complete_at_b = eb.growth_degree <= 2;
    } else {
        eb.b_infinite = false;
        eb.b = dom.b;
        eb.order_at_b = multiplicity_in(P, dom.b);
        // 1/φ has a pole of order ≥ 1 at a finite b, so the time coordinate
        // always diverges there.
        eb.t2_infinite = true;
        eb.s_complete_at_b = eb.order_at_b >= 2;
    }
    return eb;
}

std::optional<Rational> einstein_check(const Profile& pr) {
    RationalFunction phi = pr.phi();
    RationalFunction om{Poly({1, 1})};
    RationalFunction mphi = Rational(pr.m()) * phi;
    RationalFunction alpha_expr = -(mphi / om + phi.derivative()).derivative();
    if (!alpha_expr.is_constant()) return std::nullopt;
    Rational alpha = alpha_expr.constant_value();
    RationalFunction resid = RationalFunction(pr.kappa()) -
                             (mphi + om * phi.derivative()) / om -
                             RationalFunction(alpha) * om;
    if (!resid.is_zero()) return std::nullopt;
    return alpha;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::complete_einstein: return "CompleteEinstein";
        case Verdict::complete_scalar_flat: return "CompleteScalarFlat";
        case Verdict::complete_negative_csc: return "CompleteNegativeCSC";
        case Verdict::complete_positive_csc: return "CompletePositiveCSC";
        case Verdict::incomplete_at_zero_section: return "IncompleteAtZeroSection";
        case Verdict::incomplete_at_outer_end: return "IncompleteAtOuterEnd";
        case Verdict::incomplete_both_ends: return "IncompleteBothEnds";
    }
    return "?";
}

const char* verdict_meaning(Verdict v) {
    switch (v) {
        case Verdict::complete_einstein:
            return "complete Kahler-Einstein metric with Einstein constant alpha = c/(m+1)";
        case Verdict::complete_scalar_flat:
            return "complete scalar-flat Kahler metric";
        case Verdict::complete_negative_csc:
            return "complete Kahler metric of negative constant scalar curvature";
        case Verdict::complete_positive_csc:
            return "complete Kahler metric of positive constant scalar curvature";
        case Verdict::incomplete_at_zero_section:
            return "constant scalar curvature Kahler metric; incomplete near the zero "
                   "section, complete at the outer end";
        case Verdict::incomplete_at_outer_end:
            return "constant scalar curvature Kahler metric; complete near the zero "
                   "section, incomplete at the outer end";
        case Verdict::incomplete_both_ends:
            return "constant scalar curvature Kahler metric; incomplete at both ends";
    }
    return "?";
}

ClassificationReport theorem_verdict(const Profile& pr) {
    ClassificationReport rep;
    rep.behavior = endpoint_behavior(pr);
    rep.complete = rep.behavior.complete();
    rep.einstein = einstein_check(pr);
    if (rep.complete) {
        if (rep.einstein) rep.verdict = Verdict::complete_einstein;
        else if (pr.c() == 0) rep.verdict = Verdict::complete_scalar_flat;
        else if (pr.c() < 0) rep.verdict = Verdict::complete_negative_csc;
        else rep.verdict = Verdict::complete_positive_csc;
    } else if (!rep.behavior.s_complete_at_zero && rep.behavior.s_complete_at_b) {
        rep.verdict = Verdict::incomplete_at_zero_section;
    } else if (rep.behavior.s_complete_at_zero) {
        rep.verdict = Verdict::incomplete_at_outer_end;
    } else {
        rep.verdict = Verdict::incomplete_both_ends;
    }
    return rep;
}

namespace {

// φ_c·(1+τ)^m = PA + c·PB: the construction is affine in c with a
// c-independent boundary part.
struct AffineInC {
    Poly PA;
    Poly PB;
};

AffineInC affine_in_c(long m, const Rational& kappa, const BoundaryPreset& bc) {
    Poly PA = build_profile({m, kappa, 0, bc}).numerator();
    Poly P1 = build_profile({m, kappa, 1, bc}).numerator();
    return {PA, P1 - PA};
}

// Sign of p just right of 0 (p non-zero).
int sign_near_zero(const Poly& p) {
    Poly r = p;
    while (true) {
        auto [q, rem] = r.deflate(0);
        if (rem != 0) return sign(rem);
        r = std::move(q);
    }
}

}  // namespace

bool phi_positive_on_halfline(long m, const Rational& kappa, const BoundaryPreset& bc,
                              const Rational& c) {
    Poly P = build_profile({m, kappa, c, bc}).numerator();
    if (P.is_zero()) return false;
    return sturm_count_above(P, 0) == 0 && sign_near_zero(P) > 0;
}

bool phi_has_root_on_halfline(long m, const Rational& kappa, const BoundaryPreset& bc,
                              const Rational& c) {
    Poly P = build_profile({m, kappa, c, bc}).numerator();
    return !P.is_zero() && sturm_count_above(P, 0) >= 1;
}

SolveC0Result solve_c0(long m, const Rational& kappa, const BoundaryPreset& bc, double tol) {
    if (m < 1) fail(errc::invalid_argument, "c0 solve requires m >= 1");
    if (!(tol > 0)) fail(errc::invalid_argument, "c0 solve requires tol > 0");
    if (bc.tag == BoundaryTag::cone_smooth && !(kappa < 0))
        fail(errc::invalid_argument, "ConeSmooth c0 solve requires kappa < 0");
    if (bc.tag == BoundaryTag::bundle_smooth && !(kappa <= 0))
        fail(errc::invalid_argument, "BundleSmooth c0 solve requires kappa <= 0");
    if (bc.tag == BoundaryTag::custom)
        fail(errc::invalid_argument, "c0 solve supports the ConeSmooth and BundleSmooth presets");

    auto [PA, PB] = affine_in_c(m, kappa, bc);

    // (iii) ∂φ_c/∂c < 0 on (0,∞): verified per instance, never assumed.
    if (PB.is_zero() || sturm_count_above(PB, 0) != 0 || PB.eval(1) >= 0)
        fail(errc::sign_assumption_failed,
             "the c-coefficient of phi is not negative on (0, inf)");
    if (PA.is_zero())
        fail(errc::degenerate_profile, "phi at c = 0 vanishes identically");

    // H(τ) = PA/(−PB) = N/D after cancelling the shared zero at τ = 0;
    // D > 0 on (0,∞) and c₀ = inf H.
    long k = std::min(root_order_at(PA, 0), root_order_at(PB, 0));
    Poly N = PA.shift_down(k);
    Poly D = (Rational(-1) * PB).shift_down(k);

    struct Candidate {
        Rational value;
        C0Attained kind;
        RootInterval where;
    };
    std::vector<Candidate> cands;
    if (D.eval(0) != 0)
        cands.push_back({N.eval(0) / D.eval(0), C0Attained::boundary_zero, {0, 0}});
    if (N.degree() < D.degree())
        cands.push_back({Rational(0), C0Attained::at_infinity, {}});
    else if (N.degree() == D.degree())
        cands.push_back({N.leading() / D.leading(), C0Attained::at_infinity, {}});
    Poly W = N.derivative() * D - N * D.derivative();
    if (!W.is_zero()) {
        for (const RootInterval& iso : isolate_positive_roots(W)) {
            RootInterval r = refine_interval(W, iso, pow2(-64));
            Rational mid = r.midpoint();
            Rational dval = D.eval(mid);
            if (dval == 0) continue;
            cands.push_back({N.eval(mid) / dval, C0Attained::interior, r});
        }
    }
    if (cands.empty())
        fail(errc::sign_assumption_failed, "no candidate for the infimum of A/(-B)");
    const Candidate* best = &cands.front();
    for (const Candidate& cand : cands)
        if (cand.value < best->value) best = &cand;

    SolveC0Result res;
    res.cert.b_coefficient_negative = true;
    res.cert.attained = best->kind;
    Rational margin = rational_from_double(tol);
    auto certify = [&](const Rational& c0x) {
        res.cert.positive_below = phi_positive_on_halfline(m, kappa, bc, c0x - margin);
        res.cert.root_above = phi_has_root_on_halfline(m, kappa, bc, c0x + margin);
        return res.cert.positive_below && res.cert.root_above;
    };

    if (best->kind == C0Attained::interior) {
        // Walk the isolating interval of the critical point down until the
        // exact witnesses meet the tolerance.  ĉ = H(b̂) makes φ_ĉ(b̂) = 0
        // exactly; only φ′ and the ±tol Sturm checks need the shrinking.
        RootInterval r = best->where;
        bool done = false;
        for (int iter = 0; iter < 64 && !done; ++iter) {
            Rational bhat = r.midpoint();
            Rational c0x = N.eval(bhat) / D.eval(bhat);
            Profile pr = build_profile({m, kappa, c0x, bc});
            Rational phib = pr.eval_phi(bhat);
            Rational dphib = pr.eval_phi_prime(bhat);
            if (abs(phib) <= margin && abs(dphib) <= margin && certify(c0x)) {
                res.cert.c0_exact = c0x;
                res.cert.b_exact = bhat;
                res.cert.phi_at_b = phib;
                res.cert.dphi_at_b = dphib;
                res.c0 = to_double(c0x);
                res.b = to_double(bhat);
                done = true;
            } else {
                r = refine_interval(W, r, r.width() / 16);
            }
        }
        if (!done)
            fail(errc::sign_assumption_failed, "could not certify the interior double root");
        return res;
    }

    Rational c0x = best->value;
    res.cert.c0_exact = c0x;
    res.c0 = to_double(c0x);
    if (best->kind == C0Attained::boundary_zero) {
        Profile pr = build_profile({m, kappa, c0x, bc});
        res.cert.b_exact = 0;
        res.cert.phi_at_b = pr.eval_phi(0);
        res.cert.dphi_at_b = pr.eval_phi_prime(0);
        res.b = 0;
        if (abs(res.cert.phi_at_b) > margin || abs(res.cert.dphi_at_b) > margin)
            fail(errc::sign_assumption_failed, "boundary double root exceeds tolerance");
    } else {
        res.cert.b_exact = 0;
        res.cert.phi_at_b = 0;
        res.cert.dphi_at_b = 0;
        res.b = std::numeric_limits<double>::infinity();
    }
    if (!certify(c0x))
        fail(errc::sign_assumption_failed, "positivity certificates failed at c0 +- tol");
    return res;
}

}  // namespace conemom
