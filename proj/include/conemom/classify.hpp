#pragma once

#include <optional>

#include "conemom/profile.hpp"

namespace conemom {

// Orders and growth of φ at the two ends of the positivity domain, plus the
// finiteness of the time range (t₁, t₂) and geodesic completeness of each
// end: s diverges at 0 iff φ vanishes at least to second order, and at b=∞
// iff φ grows at most quadratically.
struct EndpointBehavior {
    long order_at_zero = 0;
    bool b_infinite = true;
    RootInterval b;           // when b finite
    long order_at_b = 0;      // when b finite
    long growth_degree = 0;   // deg(numerator) − m, when b = ∞
    bool t1_infinite = false;
    bool t2_infinite = false;
    bool s_complete_at_zero = false;
    bool s_complete_at_b = false;

    bool complete() const { return s_complete_at_zero && s_complete_at_b; }
};

enum class Verdict {
    complete_einstein,
    complete_scalar_flat,
    complete_negative_csc,
    complete_positive_csc,
    incomplete_at_zero_section,
    incomplete_at_outer_end,
    incomplete_both_ends,
};

const char* verdict_name(Verdict v);     // e.g. "CompleteEinstein"
const char* verdict_meaning(Verdict v);  // one-line geometric statement

struct ClassificationReport {
    EndpointBehavior behavior;
    bool complete = false;
    std::optional<Rational> einstein;  // the Einstein constant α when present
    Verdict verdict = Verdict::incomplete_both_ends;
};

EndpointBehavior endpoint_behavior(const Profile& pr);

// α such that the Ricci form equals α·(metric form), detected by symbolic
// elimination: α := −(mφ/(1+τ) + φ′)′ must be constant and the remaining
// coefficient identity κ − (mφ + (1+τ)φ′)/(1+τ) ≡ α(1+τ) must hold exactly.
std::optional<Rational> einstein_check(const Profile& pr);

ClassificationReport theorem_verdict(const Profile& pr);

enum class C0Attained { boundary_zero, interior, at_infinity };

// Exact-arithmetic evidence backing a solve_c0 output.  All flags must come
// back true; c0_exact/b_exact are the rational witnesses the Sturm checks
// ran on.
struct SolveC0Certificate {
    Rational c0_exact;
    Rational b_exact;          // meaningful unless attained == at_infinity
    C0Attained attained = C0Attained::interior;
    Rational phi_at_b;         // φ_{c₀}(b), exact
    Rational dphi_at_b;        // φ′_{c₀}(b), exact
    bool positive_below = false;  // Sturm: φ_{c₀−tol} > 0 on (0,∞)
    bool root_above = false;      // Sturm: φ_{c₀+tol} has a root in (0,∞)
    bool b_coefficient_negative = false;  // Sturm: ∂φ_c/∂c < 0 on (0,∞)
};

struct SolveC0Result {
    double c0 = 0;
    double b = 0;  // +inf when the infimum is approached at τ → ∞
    SolveC0Certificate cert;
};

// c₀ = sup{c′ : φ_c > 0 on (0,∞) for all c < c′} = inf_{τ>0} A(τ)/(−B(τ))
// for the affine decomposition φ_c = A + c·B of the closed form.
// Pre: ConeSmooth needs κ < 0, BundleSmooth needs κ ≤ 0.
// Throws errc::sign_assumption_failed if B is not negative on all of (0,∞).
SolveC0Result solve_c0(long m, const Rational& kappa, const BoundaryPreset& bc,
                       double tol = 1e-12);

// Sturm-certified positivity / root existence of φ_c on (0,∞) at an exact
// rational c (helpers for checking c against a computed c₀).
bool phi_positive_on_halfline(long m, const Rational& kappa, const BoundaryPreset& bc,
                              const Rational& c);
bool phi_has_root_on_halfline(long m, const Rational& kappa, const BoundaryPreset& bc,
                              const Rational& c);

}  // namespace conemom
