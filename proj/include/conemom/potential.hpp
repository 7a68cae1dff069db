#pragma once

#include "conemom/profile.hpp"
#include "conemom/quadrature.hpp"

#include <optional>
#include <vector>

namespace conemom {

struct PotentialOptions {
    double abs_tol = 1e-12;
    long max_intervals = 4096;
    // Integration base point; defaults to the profile's tau0.  Useful when
    // an irrational anchor is wanted (e.g. 2^{1/(m+1)} - 1).
    std::optional<double> tau0_override;
};

struct PotentialSample {
    double tau = 0;
    double t = 0;
    double F = 0;
    double G = 0;
    double s = 0;
};

struct PotentialTable {
    Profile profile;
    Rational tau0;
    std::vector<PotentialSample> samples;
    double quoted_error = 0; // max absolute error bound across all entries
};

// Reconstruction of the momentum-construction data by quadrature:
//   t(tau)  = int_{tau0}^{tau} dx / phi(x)        (time coordinate)
//   F(t)    = int_{tau0}^{tau(t)} x dx / phi(x)   (Kahler potential)
//   s(tau)  = int_{tau0}^{tau} dx / sqrt(phi(x))  (arclength)
//   G(tau)  = tau * t(tau) - F(t(tau))            (symplectic potential)
// Integrands are evaluated through the exact rational phi, so cancellation
// near roots of phi cannot corrupt them.  tau arguments must satisfy
// 0 < tau < b (errc::outside_domain); inversion failures report
// errc::outside_range; quadrature errors propagate.
class PotentialContext {
public:
    explicit PotentialContext(const Profile& pr, PotentialOptions opt = {});

    const Profile& profile() const { return profile_; }
    double tau0() const { return tau0_; }
    double domain_hi() const { return hi_; } // +inf when the domain is infinite

    double time_of_tau(double tau) const;
    // Unique tau with time_of_tau(tau) = t, by bracketed Newton iteration
    // warm-started from the previous call.
    double tau_of_time(double t) const;
    double kahler_potential_F(double t) const;
    double arclength_s(double tau) const;
    double symplectic_potential_G(double tau) const;

    // One row per grid value (strictly increasing, inside (0, b)).
    PotentialTable build_table(const std::vector<double>& taus) const;

private:
    double integrate_phi_weight(double from, double to, bool weight_x) const;
    void require_inside(double tau) const;

    Profile profile_;
    PotentialOptions opt_;
    double tau0_;
    double hi_;
    mutable double warm_tau_;
};

// Free-function forms for one-shot use.
double time_of_tau(const Profile& pr, double tau, const PotentialOptions& opt = {});
double tau_of_time(const Profile& pr, double t, const PotentialOptions& opt = {});
double kahler_potential_F(const Profile& pr, double t, const PotentialOptions& opt = {});
double arclength_s(const Profile& pr, double tau, const PotentialOptions& opt = {});
double symplectic_potential_G(const Profile& pr, double tau, const PotentialOptions& opt = {});
PotentialTable build_table(const Profile& pr, const std::vector<double>& taus,
                           const PotentialOptions& opt = {});

} // namespace conemom
