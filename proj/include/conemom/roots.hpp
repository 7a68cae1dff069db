#pragma once

#include "conemom/poly.hpp"

#include <optional>
#include <vector>

namespace conemom {

// Isolating interval for a single real root; lo == hi means the root is the
// exact rational lo.  Otherwise the root lies strictly inside (lo, hi) and
// the endpoints are not roots.
struct RootInterval {
    Rational lo, hi;
    bool is_point() const { return lo == hi; }
    Rational midpoint() const { return (lo + hi) / 2; }
    Rational width() const { return hi - lo; }
};

// Multiplicity of x0 as a root of p (0 when p(x0) != 0).  p must be non-zero.
int root_order_at(const Poly& p, const Rational& x0);

// Number of distinct real roots in the open interval (lo, hi) / (lo, +inf),
// certified by a Sturm chain with primitive-integer normalization.  The
// endpoints may be roots; they are deflated away first.  p must be non-zero.
long sturm_count(const Poly& p, const Rational& lo, const Rational& hi);
long sturm_count_above(const Poly& p, const Rational& lo);

// Strict bound B with every real root of p inside (-B, B).
Rational cauchy_root_bound(const Poly& p);

// Smallest root of p in (0, +inf), isolated by Sturm-guided bisection down
// to the requested interval width (exact roots hit by a midpoint come back
// as point intervals).  The returned lo is strictly positive.  nullopt when
// p has no positive root.
std::optional<RootInterval> smallest_positive_root(const Poly& p,
                                                   const Rational& width = pow2(-64));

// Multiplicity of the root isolated by iso.  Pre: iso is a point interval or
// contains exactly one distinct root of p.
int multiplicity_in(const Poly& p, const RootInterval& iso);

// Isolating intervals for every distinct root of p in (0, +inf), in
// increasing order.  Exact rational roots come back as point intervals; an
// endpoint of a non-point interval may itself be a different root of p (the
// open interval still isolates exactly one).
std::vector<RootInterval> isolate_positive_roots(const Poly& p);

// Shrink an isolating interval below the requested width by Sturm-guided
// bisection (point intervals pass through unchanged).
RootInterval refine_interval(const Poly& p, RootInterval iso, const Rational& width);

} // namespace conemom
