#include "conemom/asymptotics.hpp"

#include "conemom/errors.hpp"
#include "conemom/potential.hpp"
#include "conemom/profile.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace conemom {

namespace {

using CL = std::complex<long double>;

CL unity_root_l(long j, long order) {
    long double angle = 2.0L * std::numbers::pi_v<long double> *
                        static_cast<long double>(j) / static_cast<long double>(order);
    return {std::cos(angle), std::sin(angle)};
}

// Kahan's complex log1p: exact when 1+z rounds to 1; otherwise the relative
// error of log(w) is repaired by the factor z/(w-1).
CL clog1p(CL z) {
    CL w = CL(1) + z;
    if (w == CL(1))
        return z;
    return std::log(w) * (z / (w - CL(1)));
}

// log(r~^{2m+2} + 1) / (m+1), stable for r~ both large and small.
long double log_y(long m, long double r) {
    long double lr = std::log(r);
    long double e = static_cast<long double>(2 * m + 2);
    long double lp = e * lr; // log r^{2m+2}
    long double lg;          // log(r^{2m+2} + 1)
    if (lp > 40)
        lg = lp + std::log1p(std::exp(-lp));
    else
        lg = std::log1p(std::exp(lp));
    return lg / static_cast<long double>(m + 1);
}

struct LineFit {
    double slope = 0;
    double intercept = 0;
};

LineFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys) {
    double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    double denom = n * sxx - sx * sx;
    if (denom == 0)
        fail(errc::invalid_argument, "degenerate abscissas in log-log fit");
    LineFit out;
    out.slope = (n * sxy - sx * sy) / denom;
    out.intercept = (sy - out.slope * sx) / n;
    return out;
}

std::vector<double> log_spaced(double lo, double hi, int n) {
    std::vector<double> xs(n);
    double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < n; ++i)
        xs[i] = std::exp(llo + (lhi - llo) * i / (n - 1));
    return xs;
}

void require_positive_radius(double r) {
    if (!(r > 0) || !std::isfinite(r))
        fail(errc::invalid_argument, "radius must be positive and finite");
}

} // namespace

UnityRootsIdentitySpec UnityRootsIdentitySpec::make(long m) {
    if (m < 1)
        fail(errc::invalid_argument, "m must be >= 1");
    UnityRootsIdentitySpec spec;
    spec.order = m + 1;
    spec.roots.reserve(m + 1);
    for (long j = 0; j <= m; ++j) {
        CL z = unity_root_l(j, m + 1);
        spec.roots.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
    }
    for (const auto& z : spec.roots) {
        if (std::abs(std::abs(z) - 1.0) > 1e-14)
            fail(errc::invalid_argument, "root of unity is off the unit circle");
        std::complex<double> p(1, 0);
        for (long k = 0; k < spec.order; ++k)
            p *= z;
        if (std::abs(p - std::complex<double>(1, 0)) > 1e-13)
            fail(errc::invalid_argument, "root of unity has the wrong order");
    }
    return spec;
}

double closed_form_tau(long m, double t) {
    if (m < 1)
        fail(errc::invalid_argument, "m must be >= 1");
    if (!std::isfinite(t))
        fail(errc::invalid_argument, "time must be finite");
    double u = 2 * t;
    // log(e^u + 1) without overflow, then (..)^{1/(m+1)} - 1 without
    // cancellation for very negative t.
    double lg = u > 36 ? u + std::log1p(std::exp(-u)) : std::log1p(std::exp(u));
    return std::expm1(lg / (m + 1));
}

double closed_form_potential(long m, double r_tilde) {
    if (m < 1)
        fail(errc::invalid_argument, "m must be >= 1");
    require_positive_radius(r_tilde);
    long double y = std::exp(log_y(m, r_tilde));
    CL sum(0);
    for (long j = 0; j <= m; ++j) {
        CL arg = CL(y) - unity_root_l(j, m + 1);
        if (std::abs(arg) < 1e-12L)
            fail(errc::branch_cut_hit, "log argument too close to a root of unity");
        sum += unity_root_l(j, m + 1) * std::log(arg);
    }
    sum /= static_cast<long double>(m + 1);
    long double scale = std::max<long double>(1, std::abs(sum));
    if (std::abs(sum.imag()) > 1e-12L * scale)
        fail(errc::invalid_argument, "imaginary parts failed to cancel");
    return static_cast<double>(y + sum.real());
}

double potential_minus_leading(long m, double r_tilde) {
    if (m < 1)
        fail(errc::invalid_argument, "m must be >= 1");
    require_positive_radius(r_tilde);
    long double r = r_tilde;
    long double r2 = r * r;
    long double ly = log_y(m, r);
    long double y = std::exp(ly);
    // y - r~^2 = r~^2 expm1(log1p(r~^{-2m-2})/(m+1)).
    long double rho = std::exp(-static_cast<long double>(2 * m + 2) * std::log(r));
    long double head = r2 * std::expm1(std::log1p(rho) / (m + 1));
    // sum_j zeta^j log(y - zeta^j) = sum_j zeta^j log1p(-zeta^j / y): the
    // common log(y) term drops because sum_j zeta^j = 0.
    CL sum(0);
    for (long j = 0; j <= m; ++j) {
        CL zeta = unity_root_l(j, m + 1);
        CL z = -zeta / CL(y);
        if (std::abs(CL(1) + z) < 1e-12L)
            fail(errc::branch_cut_hit, "log argument too close to a root of unity");
        sum += zeta * clog1p(z);
    }
    sum /= static_cast<long double>(m + 1);
    long double scale = std::max<long double>(1, std::abs(sum));
    if (std::abs(sum.imag()) > 1e-12L * scale)
        fail(errc::invalid_argument, "imaginary parts failed to cancel");
    return static_cast<double>(head + sum.real());
}

AsymptoticReport fit_expansion(long m, std::pair<double, double> window,
                               std::pair<double, double> remainder_window) {
    if (m < 1)
        fail(errc::invalid_argument, "m must be >= 1");
    if (!(window.first >= 5))
        fail(errc::invalid_argument, "fit window must start at r~ >= 5");
    if (!(window.second > window.first) || !(remainder_window.second > remainder_window.first) ||
        !(remainder_window.first > 0))
        fail(errc::invalid_argument, "fit windows must be nonempty with positive endpoints");

    const int n = 64;
    AsymptoticReport rep;
    rep.m = m;
    rep.predicted_coefficient = Rational(-1) / (Rational(m) * Rational(m + 1));
    rep.fit_window = window;
    rep.remainder_window = remainder_window;

    // -(f - r~^2) = (1/(m(m+1))) r~^{-2m} (1 + o(1)) > 0 on the window.
    auto xs = log_spaced(window.first, window.second, n);
    std::vector<double> lx(n), ly(n);
    for (int i = 0; i < n; ++i) {
        double g = -potential_minus_leading(m, xs[i]);
        if (!(g > 0))
            fail(errc::sign_assumption_failed, "leading correction is not negative on the window");
        lx[i] = std::log(xs[i]);
        ly[i] = std::log(g);
    }
    LineFit main = fit_line(lx, ly);
    rep.fitted_exponent = main.slope;
    rep.fitted_coefficient = -std::exp(main.intercept);
    double predicted = to_double(rep.predicted_coefficient);
    rep.relative_error = std::abs(rep.fitted_coefficient - predicted) / std::abs(predicted);

    // Remainder after removing the full leading correction; decays like
    // r~^{-(4m+2)}, so it is fitted on a window of moderate radii where it
    // still clears the double-precision noise floor.
    auto rs = log_spaced(remainder_window.first, remainder_window.second, n);
    std::vector<double> rx(n), ry(n);
    for (int i = 0; i < n; ++i) {
        double lead = -std::exp(-2.0 * m * std::log(rs[i])) / (static_cast<double>(m) * (m + 1));
        double h = std::abs(potential_minus_leading(m, rs[i]) - lead);
        if (!(h > 0))
            fail(errc::sign_assumption_failed, "remainder vanished on the fit window");
        rx[i] = std::log(rs[i]);
        ry[i] = std::log(h);
    }
    rep.remainder_exponent_estimate = fit_line(rx, ry).slope;
    return rep;
}

double unity_roots_identity(const UnityRootsIdentitySpec& spec,
                            const std::vector<std::complex<double>>& samples) {
    if (spec.order < 2 || static_cast<long>(spec.roots.size()) != spec.order)
        fail(errc::invalid_argument, "spec must hold all order-many roots");
    double target = static_cast<double>(spec.order);
    double worst = 0;
    for (const auto& x : samples) {
        std::complex<double> lhs(0, 0);
        for (long j = 0; j < spec.order; ++j) {
            std::complex<double> term = spec.roots[j];
            for (long i = 0; i < spec.order; ++i)
                if (i != j)
                    term *= x - spec.roots[i];
            lhs += term;
        }
        worst = std::max(worst, std::abs(lhs - std::complex<double>(target, 0)));
    }
    return worst;
}

double cross_check_tau(long m, const std::vector<double>& times) {
    if (m < 1)
        fail(errc::invalid_argument, "m must be >= 1");
    Profile pr = build_profile({m, 2, 0, BoundaryPreset::bundle_smooth()});
    PotentialOptions opt;
    opt.tau0_override = std::expm1(std::numbers::ln2 / (m + 1)); // 2^{1/(m+1)} - 1
    PotentialContext ctx(pr, opt);
    double worst = 0;
    for (double t : times)
        worst = std::max(worst, std::abs(closed_form_tau(m, t) - ctx.tau_of_time(t)));
    return worst;
}

} // namespace conemom
