#pragma once

#include "conemom/rational.hpp"

namespace conemom {

// Constants of a (2m+1)-dimensional η-Einstein structure, Ric = λ g + ν η⊗η,
// with the derived constant κ = λ + 2.  The two linear relations λ + ν = 2m
// and κ = λ + 2 are validated at construction.
struct EtaEinsteinData {
    long m = 1;
    Rational lambda;
    Rational nu;
    Rational kappa;

    EtaEinsteinData(long m, Rational lambda, Rational nu, Rational kappa);

    static EtaEinsteinData from_lambda(long m, const Rational& lambda);
    static EtaEinsteinData from_kappa(long m, const Rational& kappa);

    bool is_sasaki_einstein() const { return lambda == 2 * m; }
};

// Transverse Ricci constant of the link of L^⊗k when K_M = L^⊗p.
struct LineBundleData {
    long p = 1;
    long k = 1;

    LineBundleData(long p, long k);
};

// λ′ = (λ + 2 − 2a)/a, ν′ = 2m − λ′, κ′ = κ/a.
EtaEinsteinData d_homothety(const EtaEinsteinData& data, const Rational& a);

// r ↦ r^a.
double d_homothety_radius(double r, const Rational& a);

Rational kappa_for_bundle(const LineBundleData& b);

}  // namespace conemom
