#pragma once

#include "conemom/poly.hpp"
#include "conemom/rational_function.hpp"
#include "conemom/roots.hpp"

namespace conemom {

enum class BoundaryTag { cone_smooth, bundle_smooth, custom };

// Values (v0, v1) = (φ(0), φ′(0)) imposed on the profile.
struct BoundaryPreset {
    BoundaryTag tag = BoundaryTag::cone_smooth;
    Rational v0;
    Rational v1;

    static BoundaryPreset cone_smooth() { return {BoundaryTag::cone_smooth, 0, 0}; }
    static BoundaryPreset bundle_smooth() { return {BoundaryTag::bundle_smooth, 0, 2}; }
    static BoundaryPreset custom(const Rational& v0, const Rational& v1);
};

const char* boundary_tag_name(BoundaryTag tag);

struct ProfileParams {
    long m = 1;
    Rational kappa;
    Rational c;
    BoundaryPreset bc;
};

// Either the whole half-line (infinite == true) or (0, b) with b isolated
// as the smallest positive root of the numerator.
struct PositivityDomain {
    bool infinite = true;
    RootInterval b;
};

// The momentum profile φ(τ) = P(τ)/(1+τ)^m with
//   P(τ) = (κ/(m+1))(1+τ)^{m+1} − (c/((m+1)(m+2)))(1+τ)^{m+2} + c₁τ + c₂,
// the closed-form solution of (mκ/(1+τ) − c)(1+τ)^m = ((1+τ)^m φ)″ with the
// two integration constants fixed by the boundary preset.
class Profile {
public:
    const ProfileParams& params() const { return params_; }
    long m() const { return params_.m; }
    const Rational& kappa() const { return params_.kappa; }
    const Rational& c() const { return params_.c; }
    const Rational& c1() const { return c1_; }
    const Rational& c2() const { return c2_; }
    const Poly& numerator() const { return numerator_; }
    const Rational& tau0() const { return tau0_; }

    // φ and φ′ as canonical rational functions of τ.
    RationalFunction phi() const;
    RationalFunction phi_prime() const;

    // Exact evaluation; throws errc::pole_at_minus_one when tau ≤ −1.
    Rational eval_phi(const Rational& tau) const;
    Rational eval_phi_prime(const Rational& tau) const;

    // Throws errc::not_positive_near_zero when φ < 0 just right of 0 and
    // errc::degenerate_profile when φ ≡ 0.
    PositivityDomain positivity_domain() const;

    // Upper end of the positivity domain as a double (+∞ when unbounded);
    // same errors as positivity_domain().
    double domain_hi() const;

    friend Profile build_profile(const ProfileParams& params);

private:
    enum class DomainStatus { infinite, finite, not_positive, degenerate };

    ProfileParams params_;
    Rational c1_;
    Rational c2_;
    Poly numerator_;
    Rational tau0_;
    DomainStatus status_ = DomainStatus::infinite;
    RootInterval b_;
};

Profile build_profile(const ProfileParams& params);

}  // namespace conemom
