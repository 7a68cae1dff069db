#include "conemom/roots.hpp"
#include "conemom/errors.hpp"

#include <vector>

namespace conemom {

namespace {

// Sturm chain p, p', -rem(...), each entry scaled to a primitive integer
// polynomial (positive scaling, so signs are untouched).
std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain;
    chain.push_back(p.primitive_part());
    Poly d = p.derivative();
    if (d.is_zero())
        return chain;
    chain.push_back(d.primitive_part());
    while (true) {
        Poly r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero())
            break;
        chain.push_back((-r).primitive_part());
    }
    return chain;
}

long variations_at(const std::vector<Poly>& chain, const Rational& x) {
    long v = 0;
    int prev = 0;
    for (const Poly& q : chain) {
        Rational val = q.eval(x);
        int s = sign(val);
        if (s == 0)
            continue;
        if (prev != 0 && s != prev)
            ++v;
        prev = s;
    }
    return v;
}

long variations_at_plus_inf(const std::vector<Poly>& chain) {
    long v = 0;
    int prev = 0;
    for (const Poly& q : chain) {
        int s = sign(q.leading());
        if (prev != 0 && s != prev)
            ++v;
        prev = s;
    }
    return v;
}

// Remove every factor (x - x0); afterwards x0 is not a root.
Poly deflate_root(Poly p, const Rational& x0) {
    while (!p.is_zero()) {
        auto [q, rem] = p.deflate(x0);
        if (rem != 0)
            break;
        p = std::move(q);
    }
    return p;
}

} // namespace

int root_order_at(const Poly& p, const Rational& x0) {
    if (p.is_zero())
        fail(errc::zero_polynomial, "root order of the zero polynomial");
    int k = 0;
    Poly q = p;
    while (true) {
        auto [quot, rem] = q.deflate(x0);
        if (rem != 0)
            break;
        ++k;
        q = std::move(quot);
        if (q.is_zero())
            break; // cannot happen: deflation of non-zero p terminates
    }
    return k;
}

long sturm_count(const Poly& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero())
        fail(errc::zero_polynomial, "root count of the zero polynomial");
    if (!(lo < hi))
        fail(errc::invalid_argument, "root count needs lo < hi");
    Poly q = deflate_root(deflate_root(p, lo), hi);
    if (q.degree() <= 0)
        return 0;
    auto chain = sturm_chain(q);
    return variations_at(chain, lo) - variations_at(chain, hi);
}

long sturm_count_above(const Poly& p, const Rational& lo) {
    if (p.is_zero())
        fail(errc::zero_polynomial, "root count of the zero polynomial");
    Poly q = deflate_root(p, lo);
    if (q.degree() <= 0)
        return 0;
    auto chain = sturm_chain(q);
    return variations_at(chain, lo) - variations_at_plus_inf(chain);
}

Rational cauchy_root_bound(const Poly& p) {
    if (p.is_zero())
        fail(errc::zero_polynomial, "root bound of the zero polynomial");
    Rational mx(0);
    const Rational& lead = p.leading();
    for (int i = 0; i < p.degree(); ++i) {
        Rational q = abs(p[i] / lead);
        if (q > mx)
            mx = q;
    }
    return mx + 1;
}

std::optional<RootInterval> smallest_positive_root(const Poly& p, const Rational& width) {
    if (p.is_zero())
        fail(errc::zero_polynomial, "root isolation on the zero polynomial");
    Poly q = deflate_root(p, Rational(0));
    if (q.degree() <= 0 || sturm_count_above(q, Rational(0)) == 0)
        return std::nullopt;

    auto chain = sturm_chain(q);
    // Variation difference with zeros skipped equals the right-limit count,
    // i.e. the number of distinct roots in the half-open cell (a, b].
    auto count_half_open = [&](const Rational& a, const Rational& b) {
        return variations_at(chain, a) - variations_at(chain, b);
    };

    Rational lo(0), hi = cauchy_root_bound(q);
    // Invariant: endpoints are not roots of q and the smallest positive root
    // lies in (lo, hi).  The Cauchy bound is strict, so the initial hi is
    // not a root, and updates below only ever move endpoints to non-roots.
    while (lo == 0 || hi - lo > width || count_half_open(lo, hi) != 1) {
        Rational mid = (lo + hi) / 2;
        if (q.eval(mid) == 0) {
            // mid itself accounts for one root of (lo, mid].
            if (count_half_open(lo, mid) == 1)
                return RootInterval{mid, mid};
            // The smallest root sits strictly below the exact root we just
            // hit; move hi to a non-root point that still traps it.
            Rational h = (lo + mid) / 2;
            while (q.eval(h) == 0 || count_half_open(lo, h) == 0)
                h = (h + mid) / 2;
            hi = h;
            continue;
        }
        if (count_half_open(lo, mid) == 0)
            lo = mid;
        else
            hi = mid;
    }
    return RootInterval{lo, hi};
}

std::vector<RootInterval> isolate_positive_roots(const Poly& p) {
    if (p.is_zero())
        fail(errc::zero_polynomial, "root isolation on the zero polynomial");
    std::vector<RootInterval> out;
    Poly q = deflate_root(p, Rational(0));
    if (q.degree() <= 0)
        return out;
    std::vector<std::pair<Rational, Rational>> work;
    work.emplace_back(Rational(0), cauchy_root_bound(q));
    while (!work.empty()) {
        auto [lo, hi] = work.back();
        work.pop_back();
        long n = sturm_count(q, lo, hi);
        if (n == 0)
            continue;
        if (n == 1) {
            out.push_back({lo, hi});
            continue;
        }
        // Exact roots hit by a split point are reported immediately; the
        // open-interval counts on both halves then ignore them.
        Rational mid = (lo + hi) / 2;
        if (q.eval(mid) == 0)
            out.push_back({mid, mid});
        work.emplace_back(lo, mid);
        work.emplace_back(mid, hi);
    }
    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

RootInterval refine_interval(const Poly& p, RootInterval iso, const Rational& width) {
    if (iso.is_point())
        return iso;
    while (iso.width() > width) {
        Rational mid = iso.midpoint();
        if (p.eval(mid) == 0)
            return {mid, mid};
        if (sturm_count(p, iso.lo, mid) >= 1)
            iso.hi = mid;
        else
            iso.lo = mid;
    }
    return iso;
}

int multiplicity_in(const Poly& p, const RootInterval& iso) {
    if (p.is_zero())
        fail(errc::zero_polynomial, "multiplicity on the zero polynomial");
    if (iso.is_point())
        return root_order_at(p, iso.lo);
    // Repeated gcd with the derivative peels one multiplicity level per
    // step; count how many levels still see the isolated root.
    int mult = 0;
    Poly g = p;
    while (g.degree() >= 1 && sturm_count(g, iso.lo, iso.hi) >= 1) {
        ++mult;
        if (g.degree() == 1)
            break;
        g = poly_gcd(g, g.derivative());
    }
    return mult;
}

} // namespace conemom
