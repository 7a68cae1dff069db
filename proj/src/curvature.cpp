#include "conemom/curvature.hpp"

#include "conemom/errors.hpp"

namespace conemom {

namespace {

RationalFunction one_plus_tau() { return RationalFunction(Poly({1, 1})); }

}  // namespace

RationalFunction scalar_curvature(long m, const Rational& kappa, const RationalFunction& phi) {
    RationalFunction om_m{Poly::one_plus_x_pow(m)};
    RationalFunction numerator = om_m * phi;
    return RationalFunction(Poly::constant(m * kappa), Poly({1, 1})) -
           numerator.derivative().derivative() / om_m;
}

RationalFunction scalar_curvature(const Profile& pr) {
    return scalar_curvature(pr.m(), pr.kappa(), pr.phi());
}

RicciCoefficients ricci_coefficients(long m, const Rational& kappa, const RationalFunction& phi) {
    RationalFunction om = one_plus_tau();
    RationalFunction mphi = Rational(m) * phi;
    RicciCoefficients rc;
    rc.A = RationalFunction(kappa) - (mphi + om * phi.derivative()) / om;
    rc.B = -((mphi / om).derivative() + phi.derivative().derivative()) * phi;
    return rc;
}

RicciCoefficients ricci_coefficients(const Profile& pr) {
    return ricci_coefficients(pr.m(), pr.kappa(), pr.phi());
}

RationalFunction laplacian_radial(long m, const RationalFunction& phi, const RationalFunction& u) {
    RationalFunction flux = u.derivative() * phi;
    return RationalFunction(Poly::constant(m), Poly({1, 1})) * flux + flux.derivative();
}

RationalFunction laplacian_radial(const Profile& pr, const RationalFunction& u) {
    PositivityDomain dom = pr.positivity_domain();
    long poles = dom.infinite ? sturm_count_above(u.den(), 0)
                              : sturm_count(u.den(), 0, dom.b.hi);
    if (poles > 0) fail(errc::pole_in_domain, "u has a pole inside the positivity domain");
    return laplacian_radial(pr.m(), pr.phi(), u);
}

RationalFunction volume_density(long m, const RationalFunction& phi) {
    return Rational(m + 1) * (RationalFunction{Poly::one_plus_x_pow(m)} * phi);
}

RationalFunction volume_density(const Profile& pr) {
    return volume_density(pr.m(), pr.phi());
}

}  // namespace conemom
