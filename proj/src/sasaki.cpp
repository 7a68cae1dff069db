#include "conemom/sasaki.hpp"

#include <cmath>

#include "conemom/errors.hpp"

namespace conemom {

EtaEinsteinData::EtaEinsteinData(long m_, Rational lambda_, Rational nu_, Rational kappa_)
    : m(m_), lambda(std::move(lambda_)), nu(std::move(nu_)), kappa(std::move(kappa_)) {
    if (m < 1) fail(errc::invalid_argument, "m must be a positive integer");
    if (lambda + nu != 2 * m)
        fail(errc::invalid_argument, "eta-Einstein constants must satisfy lambda + nu = 2m");
    if (kappa != lambda + 2)
        fail(errc::invalid_argument, "eta-Einstein constants must satisfy kappa = lambda + 2");
}

EtaEinsteinData EtaEinsteinData::from_lambda(long m, const Rational& lambda) {
    return EtaEinsteinData(m, lambda, 2 * m - lambda, lambda + 2);
}

EtaEinsteinData EtaEinsteinData::from_kappa(long m, const Rational& kappa) {
    return from_lambda(m, kappa - 2);
}

LineBundleData::LineBundleData(long p_, long k_) : p(p_), k(k_) {
    if (p < 1 || k < 1) fail(errc::invalid_argument, "line bundle powers must be >= 1");
}

EtaEinsteinData d_homothety(const EtaEinsteinData& data, const Rational& a) {
    if (a <= 0) fail(errc::non_positive_scale, "D-homothety scale must be positive");
    Rational lambda = (data.lambda + 2 - 2 * a) / a;
    return EtaEinsteinData(data.m, lambda, 2 * data.m - lambda, data.kappa / a);
}

double d_homothety_radius(double r, const Rational& a) {
    if (a <= 0) fail(errc::non_positive_scale, "D-homothety scale must be positive");
    if (!(r > 0)) fail(errc::invalid_argument, "radius must be positive");
    return std::pow(r, to_double(a));
}

Rational kappa_for_bundle(const LineBundleData& b) {
    return Rational(2 * b.p) / b.k;
}

}  // namespace conemom
