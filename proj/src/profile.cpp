#include "conemom/profile.hpp"

#include <limits>

#include "conemom/errors.hpp"

namespace conemom {

BoundaryPreset BoundaryPreset::custom(const Rational& v0, const Rational& v1) {
    if (v0 < 0) fail(errc::invalid_argument, "custom boundary preset requires v0 >= 0");
    return {BoundaryTag::custom, v0, v1};
}

const char* boundary_tag_name(BoundaryTag tag) {
    switch (tag) {
        case BoundaryTag::cone_smooth: return "ConeSmooth";
        case BoundaryTag::bundle_smooth: return "BundleSmooth";
        case BoundaryTag::custom: return "Custom";
    }
    return "?";
}

Profile build_profile(const ProfileParams& params) {
    if (params.m < 1) fail(errc::invalid_argument, "profile requires m >= 1");
    if (params.bc.tag == BoundaryTag::custom && params.bc.v0 < 0)
        fail(errc::invalid_argument, "custom boundary preset requires v0 >= 0");

    const long m = params.m;
    const Rational& kappa = params.kappa;
    const Rational& c = params.c;

    // base(τ) = (κ/(m+1))(1+τ)^{m+1} − (c/((m+1)(m+2)))(1+τ)^{m+2}
    Poly base = (kappa / (m + 1)) * Poly::one_plus_x_pow(m + 1) -
                (c / ((m + 1) * Rational(m + 2))) * Poly::one_plus_x_pow(m + 2);

    // φ(0) = P(0) and φ′(0) = P′(0) − m·P(0) pin the integration constants.
    Profile pr;
    pr.params_ = params;
    pr.c2_ = params.bc.v0 - base.eval(0);
    pr.c1_ = params.bc.v1 + m * params.bc.v0 - base.derivative().eval(0);
    pr.numerator_ = base + Poly({pr.c2_, pr.c1_});

    if (pr.eval_phi(0) != params.bc.v0 || pr.eval_phi_prime(0) != params.bc.v1)
        fail(errc::degenerate_boundary, "boundary conditions could not be imposed");

    const Poly& P = pr.numerator_;
    if (P.is_zero()) {
        pr.status_ = Profile::DomainStatus::degenerate;
        return pr;
    }
    long ord0 = root_order_at(P, 0);
    Poly reduced = P;
    for (long i = 0; i < ord0; ++i) reduced = reduced.deflate(0).first;
    if (reduced.eval(0) < 0) {
        pr.status_ = Profile::DomainStatus::not_positive;
        return pr;
    }
    if (auto iso = smallest_positive_root(P)) {
        pr.status_ = Profile::DomainStatus::finite;
        pr.b_ = *iso;
        pr.tau0_ = iso->lo / 2;
    } else {
        pr.status_ = Profile::DomainStatus::infinite;
        pr.tau0_ = 1;
    }
    return pr;
}

RationalFunction Profile::phi() const {
    return RationalFunction(numerator_, Poly::one_plus_x_pow(params_.m));
}

RationalFunction Profile::phi_prime() const {
    return phi().derivative();
}

Rational Profile::eval_phi(const Rational& tau) const {
    if (tau <= -1) fail(errc::pole_at_minus_one, "phi is defined only for tau > -1");
    Rational om = 1 + tau;
    Rational denom = om;
    for (long i = 1; i < params_.m; ++i) denom *= om;
    return numerator_.eval(tau) / denom;
}

Rational Profile::eval_phi_prime(const Rational& tau) const {
    if (tau <= -1) fail(errc::pole_at_minus_one, "phi is defined only for tau > -1");
    // φ′ = (P′(1+τ) − mP) / (1+τ)^{m+1}
    Rational om = 1 + tau;
    Rational denom = om;
    for (long i = 0; i < params_.m; ++i) denom *= om;
    return (numerator_.derivative().eval(tau) * om - params_.m * numerator_.eval(tau)) / denom;
}

PositivityDomain Profile::positivity_domain() const {
    switch (status_) {
        case DomainStatus::infinite: return {true, {}};
        case DomainStatus::finite: return {false, b_};
        case DomainStatus::not_positive:
            fail(errc::not_positive_near_zero, "phi is negative immediately right of 0");
        case DomainStatus::degenerate:
            fail(errc::degenerate_profile, "phi is identically zero");
    }
    fail(errc::degenerate_profile, "unreachable");
}

double Profile::domain_hi() const {
    PositivityDomain dom = positivity_domain();
    if (dom.infinite) return std::numeric_limits<double>::infinity();
    return to_double(dom.b.midpoint());
}

}  // namespace conemom
