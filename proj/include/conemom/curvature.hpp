#pragma once

#include "conemom/profile.hpp"
#include "conemom/rational_function.hpp"

namespace conemom {

// Coefficients of the Ricci form in the frame (ω^T, dt∧d^c t):
// A = κ − (mφ + (1+τ)φ′)/(1+τ),  B = −((mφ/(1+τ))′ + φ″)·φ.
// An Einstein profile with constant α has A ≡ α(1+τ) and B ≡ αφ.
struct RicciCoefficients {
    RationalFunction A;
    RationalFunction B;
};

// σ_φ = mκ/(1+τ) − ((1+τ)^m φ)″/(1+τ)^m.  Constant ≡ c for built profiles.
RationalFunction scalar_curvature(long m, const Rational& kappa, const RationalFunction& phi);
RationalFunction scalar_curvature(const Profile& pr);

RicciCoefficients ricci_coefficients(long m, const Rational& kappa, const RationalFunction& phi);
RicciCoefficients ricci_coefficients(const Profile& pr);

// Δ_φ u = (m/(1+τ))u′φ + (u′φ)′.  The Profile overload rejects u with a pole
// inside the positivity domain (PoleInDomain).
RationalFunction laplacian_radial(long m, const RationalFunction& phi, const RationalFunction& u);
RationalFunction laplacian_radial(const Profile& pr, const RationalFunction& u);

// Scalar factor of ω_φ^{m+1}: (m+1)(1+τ)^m φ.
RationalFunction volume_density(long m, const RationalFunction& phi);
RationalFunction volume_density(const Profile& pr);

}  // namespace conemom
