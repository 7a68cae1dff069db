#include "conemom/potential.hpp"
#include "conemom/errors.hpp"

#include <cmath>

namespace conemom {

namespace {
enum { kTime = 0, kKahler = 1, kArclength = 2 };
} // namespace

PotentialContext::PotentialContext(const Profile& pr, PotentialOptions opt)
    : profile_(pr), opt_(opt) {
    hi_ = pr.domain_hi();
    tau0_ = opt_.tau0_override ? *opt_.tau0_override : to_double(pr.tau0());
    if (!(tau0_ > 0) || !(tau0_ < hi_))
        fail(errc::outside_domain, "tau0 must lie strictly inside (0, b)");
    warm_tau_ = tau0_;
}

void PotentialContext::require_inside(double tau) const {
    if (!(tau > 0) || !(tau < hi_))
        fail(errc::outside_domain, "tau must lie strictly inside (0, b)");
}

double PotentialContext::integrate_phi_weight(double from, double to, bool weight_x) const {
    return integrate(
               [&](double x) {
                   double phi = to_double(profile_.eval_phi(rational_from_double(x)));
                   return weight_x ? x / phi : 1.0 / phi;
               },
               from, to, {opt_.abs_tol, opt_.max_intervals})
        .value;
}

double PotentialContext::time_of_tau(double tau) const {
    require_inside(tau);
    return integrate_phi_weight(tau0_, tau, false);
}

double PotentialContext::arclength_s(double tau) const {
    require_inside(tau);
    return integrate(
               [&](double x) {
                   double phi = to_double(profile_.eval_phi(rational_from_double(x)));
                   return 1.0 / std::sqrt(phi);
               },
               tau0_, tau, {opt_.abs_tol, opt_.max_intervals})
        .value;
}

double PotentialContext::tau_of_time(double t) const {
    if (!std::isfinite(t))
        fail(errc::outside_range, "the time coordinate must be finite");

    // Bracket [lo, hi] with time(lo) <= t <= time(hi), expanding from the
    // last solution.  Expansion stalls when t falls outside (t1, t2).
    double lo = warm_tau_, hi = warm_tau_;
    double t_lo = time_of_tau(lo), t_hi = t_lo;
    int guard = 0;
    while (t_hi < t) {
        double cand = std::isinf(hi_) ? hi * 2 : 0.5 * (hi + hi_);
        if (++guard > 200 || !(cand > hi) || !(cand < hi_))
            fail(errc::outside_range, "time value above the range of t(tau)");
        hi = cand;
        t_hi = time_of_tau(hi);
    }
    guard = 0;
    while (t_lo > t) {
        double cand = 0.5 * lo;
        if (++guard > 200 || !(cand > 0))
            fail(errc::outside_range, "time value below the range of t(tau)");
        lo = cand;
        t_lo = time_of_tau(lo);
    }

    // Newton in tau (dt/dtau = 1/phi), falling back to bisection whenever
    // the step leaves the bracket.
    double x = std::clamp(warm_tau_, lo, hi);
    for (int it = 0; it < 200; ++it) {
        double fx = time_of_tau(x) - t;
        if (std::abs(fx) <= opt_.abs_tol) {
            warm_tau_ = x;
            return x;
        }
        if (fx > 0)
            hi = x;
        else
            lo = x;
        double phi = to_double(profile_.eval_phi(rational_from_double(x)));
        double next = x - fx * phi;
        if (!(next > lo) || !(next < hi))
            next = 0.5 * (lo + hi);
        if (next == x)
            next = 0.5 * (lo + hi);
        x = next;
    }
    fail(errc::outside_range, "time inversion did not converge");
}

double PotentialContext::kahler_potential_F(double t) const {
    double tau = tau_of_time(t);
    return integrate_phi_weight(tau0_, tau, true);
}

double PotentialContext::symplectic_potential_G(double tau) const {
    require_inside(tau);
    double t = integrate_phi_weight(tau0_, tau, false);
    double F = integrate_phi_weight(tau0_, tau, true);
    return tau * t - F;
}

PotentialTable PotentialContext::build_table(const std::vector<double>& taus) const {
    if (taus.empty())
        fail(errc::invalid_argument, "build_table needs at least one grid point");
    for (size_t i = 0; i < taus.size(); ++i) {
        require_inside(taus[i]);
        if (i > 0 && !(taus[i] > taus[i - 1]))
            fail(errc::invalid_argument, "build_table grid must be strictly increasing");
    }

    const size_t n = taus.size();
    std::vector<double> tcol(n), fcol(n), scol(n), terr(n, 0), ferr(n, 0), serr(n, 0);

    // Prefix integrals walked outward from tau0 in both directions; each
    // segment is integrated once and the quadrature error bounds add up
    // along the walk.
    size_t first_above = 0;
    while (first_above < n && taus[first_above] < tau0_)
        ++first_above;

    QuadratureOptions qopt{opt_.abs_tol, opt_.max_intervals};
    auto seg = [&](double a, double b, int kind) {
        return integrate(
            [&](double x) {
                double phi = to_double(profile_.eval_phi(rational_from_double(x)));
                if (kind == kTime)
                    return 1.0 / phi;
                if (kind == kKahler)
                    return x / phi;
                return 1.0 / std::sqrt(phi);
            },
            a, b, qopt);
    };

    for (int kind : {kTime, kKahler, kArclength}) {
        std::vector<double>& col = kind == kTime ? tcol : (kind == kKahler ? fcol : scol);
        std::vector<double>& ecol = kind == kTime ? terr : (kind == kKahler ? ferr : serr);
        double acc = 0, eacc = 0, prev = tau0_;
        for (size_t i = first_above; i < n; ++i) {
            QuadratureResult r = seg(prev, taus[i], kind);
            acc += r.value;
            eacc += r.error;
            col[i] = acc;
            ecol[i] = eacc;
            prev = taus[i];
        }
        acc = 0, eacc = 0, prev = tau0_;
        for (size_t j = first_above; j-- > 0;) {
            QuadratureResult r = seg(prev, taus[j], kind);
            acc += r.value;
            eacc += r.error;
            col[j] = acc;
            ecol[j] = eacc;
            prev = taus[j];
        }
    }

    PotentialTable table;
    table.profile = profile_;
    table.tau0 = opt_.tau0_override ? rational_from_double(tau0_) : profile_.tau0();
    table.samples.resize(n);
    double quoted = 0;
    for (size_t i = 0; i < n; ++i) {
        PotentialSample& row = table.samples[i];
        row.tau = taus[i];
        row.t = tcol[i];
        row.F = fcol[i];
        row.s = scol[i];
        row.G = taus[i] * tcol[i] - fcol[i];
        double gerr = std::abs(taus[i]) * terr[i] + ferr[i];
        quoted = std::max({quoted, terr[i], ferr[i], serr[i], gerr});
    }
    table.quoted_error = quoted;
    return table;
}

double time_of_tau(const Profile& pr, double tau, const PotentialOptions& opt) {
    return PotentialContext(pr, opt).time_of_tau(tau);
}

double tau_of_time(const Profile& pr, double t, const PotentialOptions& opt) {
    return PotentialContext(pr, opt).tau_of_time(t);
}

double kahler_potential_F(const Profile& pr, double t, const PotentialOptions& opt) {
    return PotentialContext(pr, opt).kahler_potential_F(t);
}

double arclength_s(const Profile& pr, double tau, const PotentialOptions& opt) {
    return PotentialContext(pr, opt).arclength_s(tau);
}

double symplectic_potential_G(const Profile& pr, double tau, const PotentialOptions& opt) {
    return PotentialContext(pr, opt).symplectic_potential_G(tau);
}

PotentialTable build_table(const Profile& pr, const std::vector<double>& taus,
                           const PotentialOptions& opt) {
    return PotentialContext(pr, opt).build_table(taus);
}

} // namespace conemom
