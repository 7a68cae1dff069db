#pragma once

#include "conemom/rational.hpp"

#include <complex>
#include <utility>
#include <vector>

namespace conemom {

// Checks surrounding the Ricci-flat line-bundle metric (kappa = 2, c = 0,
// BundleSmooth): its closed-form tau(t), the Kahler-potential expansion
// f = r~^2 - r~^{-2m}/(m(m+1)) + O(r~^{-4m-2}), and the roots-of-unity
// identity used to derive it.

struct AsymptoticReport {
    long m = 0;
    double fitted_coefficient = 0;             // from the log-log fit
    Rational predicted_coefficient;            // -1/(m(m+1)), exact
    std::pair<double, double> fit_window;      // in r~
    double relative_error = 0;                 // |fitted - predicted| / |predicted|
    double fitted_exponent = 0;                // should be about -2m
    double remainder_exponent_estimate = 0;    // should be about -(4m+2)
    std::pair<double, double> remainder_window;
};

struct UnityRootsIdentitySpec {
    long order = 0;                          // m+1
    std::vector<std::complex<double>> roots; // zeta^j, j = 0..m

    // Builds the (m+1)-th roots of unity and asserts |zeta^j| = 1 within
    // 1e-14 and zeta^{m+1} = 1 within 1e-13.
    static UnityRootsIdentitySpec make(long m);
};

// tau(t) = (e^{2t} + 1)^{1/(m+1)} - 1, in overflow/cancellation-safe form.
double closed_form_tau(long m, double t);

// f(r~) = y + (1/(m+1)) sum_j zeta^j log(y - zeta^j), y = (r~^{2m+2}+1)^{1/(m+1)}.
// Real part of the complex closed form; the imaginary parts must cancel to
// 1e-12 (asserted).  Throws errc::branch_cut_hit when a log argument has
// modulus below 1e-12.
double closed_form_potential(long m, double r_tilde);

// f(r~) - r~^2 evaluated without catastrophic cancellation (expm1/log1p
// and sum_j zeta^j = 0 remove the large common parts analytically).
double potential_minus_leading(long m, double r_tilde);

// Log-log least-squares fit of -(f - r~^2) over `window` (which must start
// at r~ >= 5); the remainder exponent is fitted on `remainder_window`
// after subtracting the leading correction.
AsymptoticReport fit_expansion(long m, std::pair<double, double> window = {10, 100},
                               std::pair<double, double> remainder_window = {2, 6});

// max_x |sum_j zeta^j prod_{i != j} (x - zeta^i) - (m+1)| over the samples.
double unity_roots_identity(const UnityRootsIdentitySpec& spec,
                            const std::vector<std::complex<double>>& samples);

// max_t |closed_form_tau(m, t) - tau_of_time(t)| on the profile
// (m, kappa=2, c=0, BundleSmooth) anchored at tau0 = 2^{1/(m+1)} - 1.
double cross_check_tau(long m, const std::vector<double>& times);

} // namespace conemom
