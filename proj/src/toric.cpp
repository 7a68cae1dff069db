#include "conemom/toric.hpp"

#include "conemom/errors.hpp"
#include "conemom/lp.hpp"

#include <algorithm>

namespace conemom {

namespace {

Int row_gcd(const IntMatrix& M, long i) {
    Int g(0);
    for (long j = 0; j < M.cols(); ++j)
        g = gcd(g, M.at(i, j));
    return g;
}

std::vector<Rational> rational_row(const IntMatrix& M, long i) {
    std::vector<Rational> r(static_cast<size_t>(M.cols()));
    for (long j = 0; j < M.cols(); ++j)
        r[static_cast<size_t>(j)] = Rational(M.at(i, j));
    return r;
}

Rational pair_with_row(const std::vector<Rational>& y, const IntMatrix& M, long i) {
    Rational s(0);
    for (long j = 0; j < M.cols(); ++j)
        s += y[static_cast<size_t>(j)] * Rational(M.at(i, j));
    return s;
}

// Does {y in C : <y, lambda_i> = 0 for i in subset} contain a nonzero
// point?  Pure apex faces are what the exclusive goodness reading skips.
bool face_beyond_apex(const ToricDiagram& diag, const std::vector<int>& subset, bool rank_deficient) {
    // A rank-deficient normal set leaves a lineality space inside every
    // face, so nothing is apex-only.
    if (rank_deficient)
        return true;
    IntMatrix sub = diag.lambdas.select_rows(subset);
    if (rank_of(sub) == diag.dim)
        return false; // the equalities alone pin y = 0
    // Otherwise a nonzero face point, if any, can be scaled until the
    // inactive pairings sum to 1 (they are >= 0, and all-zero pairings
    // would need the lineality space excluded above).
    std::vector<Constraint> cons;
    std::vector<char> in_subset(static_cast<size_t>(diag.d), 0);
    for (int i : subset)
        in_subset[static_cast<size_t>(i)] = 1;
    std::vector<Rational> active_sum(static_cast<size_t>(diag.dim), Rational(0));
    for (long i = 0; i < diag.d; ++i) {
        std::vector<Rational> row = rational_row(diag.lambdas, i);
        if (in_subset[static_cast<size_t>(i)]) {
            cons.push_back({row, Rel::eq, Rational(0)});
        } else {
            cons.push_back({row, Rel::ge, Rational(0)});
            for (long j = 0; j < diag.dim; ++j)
                active_sum[static_cast<size_t>(j)] += row[static_cast<size_t>(j)];
        }
    }
    cons.push_back({active_sum, Rel::ge, Rational(1)});
    return lp_feasible(diag.dim, cons).feasible;
}

} // namespace

ToricDiagram ToricDiagram::make(IntMatrix lambdas, std::optional<std::vector<Rational>> gamma,
                                std::optional<long> ell) {
    if (lambdas.rows() < 1 || lambdas.cols() < 1)
        fail(errc::invalid_argument, "a toric diagram needs at least one facet normal");
    ToricDiagram diag;
    diag.dim = lambdas.cols();
    diag.d = lambdas.rows();
    diag.lambdas = std::move(lambdas);
    for (long i = 0; i < diag.d; ++i) {
        Int g = row_gcd(diag.lambdas, i);
        if (g == 0)
            fail(errc::invalid_argument, "facet normal " + std::to_string(i) + " is zero");
        if (g != 1)
            fail(errc::invalid_argument,
                 "facet normal " + std::to_string(i) + " is not primitive (gcd " + g.str() + ")");
    }
    if (gamma) {
        if (static_cast<long>(gamma->size()) != diag.dim)
            fail(errc::invalid_argument, "gamma has the wrong dimension");
        for (long i = 0; i < diag.d; ++i)
            if (pair_with_row(*gamma, diag.lambdas, i) != -1)
                fail(errc::invalid_argument,
                     "gamma does not pair to -1 with facet normal " + std::to_string(i));
        diag.gamma = std::move(gamma);
    }
    if (ell) {
        if (!diag.gamma)
            fail(errc::invalid_argument, "a height needs gamma");
        if (*ell < 1)
            fail(errc::invalid_argument, "the height ell must be a positive integer");
        Int g(0);
        for (const Rational& q : *diag.gamma) {
            Rational scaled = Rational(*ell) * q;
            if (denominator(scaled) != 1)
                fail(errc::invalid_argument, "ell * gamma is not integral");
            g = gcd(g, numerator(scaled));
        }
        if (g != 1)
            fail(errc::invalid_argument, "ell * gamma is not primitive (gcd " + g.str() + ")");
        diag.ell = ell;
    }
    return diag;
}

PrimitiveMinimalReport check_primitive_minimal(const ToricDiagram& diag) {
    PrimitiveMinimalReport rep;
    rep.primitive = true;
    for (long i = 0; i < diag.d && rep.primitive; ++i)
        if (row_gcd(diag.lambdas, i) != 1) {
            rep.primitive = false;
            rep.bad_primitive_row = i;
        }

    // Interior first: {y : <y, lambda_i> >= 1} is non-empty exactly when
    // the cone C has interior points (scale any interior y up).
    std::vector<Constraint> interior;
    for (long i = 0; i < diag.d; ++i)
        interior.push_back({rational_row(diag.lambdas, i), Rel::ge, Rational(1)});
    if (!lp_feasible(diag.dim, interior).feasible)
        fail(errc::empty_interior, "the cone cut out by the normals has empty interior");

    rep.minimal = true;
    for (long j = 0; j < diag.d && rep.minimal; ++j) {
        std::vector<Constraint> cons;
        for (long i = 0; i < diag.d; ++i)
            cons.push_back({rational_row(diag.lambdas, i),
                            i == j ? Rel::le : Rel::ge,
                            i == j ? Rational(-1) : Rational(0)});
        if (!lp_feasible(diag.dim, cons).feasible) {
            rep.minimal = false;
            rep.redundant_row = j;
        }
    }
    return rep;
}

GoodnessCertificate check_good(const ToricDiagram& diag, long facet_cap) {
    if (diag.d > facet_cap)
        fail(errc::too_many_facets, "facet count " + std::to_string(diag.d) +
                                        " exceeds the subset-scan cap " + std::to_string(facet_cap));
    if (!check_primitive_minimal(diag).ok())
        fail(errc::invalid_argument, "goodness requires a primitive, minimal normal set");

    const bool rank_deficient = rank_of(diag.lambdas) < diag.dim;

    // Subsets ordered by size then lexicographically, so the recorded
    // violation is canonical.
    std::vector<std::vector<int>> subsets;
    for (long mask = 1; mask < (1L << diag.d); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < diag.d; ++i)
            if (mask & (1L << i))
                s.push_back(i);
        subsets.push_back(std::move(s));
    }
    std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });

    GoodnessCertificate cert;
    cert.good = true;
    cert.good_excluding_apex = true;
    for (const std::vector<int>& s : subsets) {
        ++cert.subsets_checked;
        IntMatrix sub = diag.lambdas.select_rows(s);
        SmithForm snf = smith_normal_form(sub);
        bool independent = snf.rank() == static_cast<long>(s.size());
        bool saturated = true;
        for (const Int& dv : snf.divisors)
            if (dv != 0 && dv != 1)
                saturated = false;
        if (independent && saturated)
            continue;
        FaceViolation v;
        v.subset = s;
        v.independent = independent;
        v.divisors = snf.divisors;
        v.apex_only = !face_beyond_apex(diag, s, rank_deficient);
        cert.good = false;
        if (!v.apex_only)
            cert.good_excluding_apex = false;
        if (!cert.first_violation)
            cert.first_violation = std::move(v);
    }
    cert.readings_disagree = cert.good != cert.good_excluding_apex;
    return cert;
}

HeightResult compute_height(const ToricDiagram& diag) {
    HeightResult res;
    const long n = diag.dim, d = diag.d;

    // Gaussian elimination on [lambdas | -1].
    std::vector<std::vector<Rational>> a(static_cast<size_t>(d),
                                         std::vector<Rational>(static_cast<size_t>(n + 1)));
    for (long i = 0; i < d; ++i) {
        for (long j = 0; j < n; ++j)
            a[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rational(diag.lambdas.at(i, j));
        a[static_cast<size_t>(i)][static_cast<size_t>(n)] = Rational(-1);
    }
    std::vector<long> pivot_col;
    long r = 0;
    for (long c = 0; c < n && r < d; ++c) {
        long p = -1;
        for (long i = r; i < d; ++i)
            if (a[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0) {
                p = i;
                break;
            }
        if (p < 0)
            continue;
        std::swap(a[static_cast<size_t>(p)], a[static_cast<size_t>(r)]);
        const Rational piv = a[static_cast<size_t>(r)][static_cast<size_t>(c)];
        for (long j = c; j <= n; ++j)
            a[static_cast<size_t>(r)][static_cast<size_t>(j)] /= piv;
        for (long i = 0; i < d; ++i) {
            if (i == r)
                continue;
            Rational f = a[static_cast<size_t>(i)][static_cast<size_t>(c)];
            if (f == 0)
                continue;
            for (long j = c; j <= n; ++j)
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                    f * a[static_cast<size_t>(r)][static_cast<size_t>(j)];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (long i = r; i < d; ++i)
        if (a[static_cast<size_t>(i)][static_cast<size_t>(n)] != 0) {
            res.status = HeightResult::Status::inconsistent;
            res.note = "no gamma pairs to -1 with every facet normal";
            return res;
        }
    if (r < n) {
        res.status = HeightResult::Status::ambiguous;
        res.note = "gamma is underdetermined: the solution space has dimension " +
                   std::to_string(n - r);
        return res;
    }

    std::vector<Rational> gamma(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i)
        gamma[static_cast<size_t>(pivot_col[static_cast<size_t>(i)])] =
            a[static_cast<size_t>(i)][static_cast<size_t>(n)];

    Int lc(1);
    for (const Rational& q : gamma)
        lc = lcm(lc, denominator(q));
    Height h;
    h.gamma = std::move(gamma);
    h.ell = lc.convert_to<long>();

    // ell*gamma is primitive for any solvable system: a common prime of
    // the entries divides every pairing -ell, hence ell, contradicting the
    // minimality of ell.  Verified anyway.
    Int g(0);
    for (const Rational& q : h.gamma)
        g = gcd(g, numerator(Rational(lc) * q));
    if (g != 1)
        fail(errc::invalid_argument, "ell*gamma failed primitivity (cannot happen)");

    res.status = HeightResult::Status::found;
    res.height = std::move(h);
    return res;
}

namespace {

Height require_height(const ToricDiagram& diag) {
    HeightResult hr = compute_height(diag);
    if (hr.status == HeightResult::Status::ambiguous)
        fail(errc::ambiguous_gamma, hr.note);
    if (hr.status != HeightResult::Status::found)
        fail(errc::invalid_argument, hr.note);
    return *hr.height;
}

} // namespace

ReebReport reeb_admissible(const ToricDiagram& diag, const ReebVector& xi) {
    if (static_cast<long>(xi.xi.size()) != diag.dim)
        fail(errc::invalid_argument, "the Reeb vector has the wrong dimension");
    Height h = require_height(diag);

    ReebReport rep;
    rep.gamma = h.gamma;
    rep.ell = h.ell;

    Rational pairing(0);
    for (long j = 0; j < diag.dim; ++j)
        pairing += h.gamma[static_cast<size_t>(j)] * xi.xi[static_cast<size_t>(j)];
    rep.normalization_ok = pairing == Rational(-diag.dim);

    rep.full_rank = rank_of(diag.lambdas) == diag.dim;

    // Interior of cone(lambda_i), up to positive rescaling of xi:
    // (1+v) xi = sum_i (1+u_i) lambda_i with u, v >= 0.
    std::vector<Constraint> cons;
    for (long j = 0; j < diag.dim; ++j) {
        Constraint c;
        c.a.resize(static_cast<size_t>(diag.d + 1));
        Rational rhs = xi.xi[static_cast<size_t>(j)];
        for (long i = 0; i < diag.d; ++i) {
            c.a[static_cast<size_t>(i)] = Rational(diag.lambdas.at(i, j));
            rhs -= Rational(diag.lambdas.at(i, j));
        }
        c.a[static_cast<size_t>(diag.d)] = -xi.xi[static_cast<size_t>(j)];
        c.rel = Rel::eq;
        c.rhs = rhs;
        cons.push_back(std::move(c));
    }
    for (long k = 0; k <= diag.d; ++k) {
        Constraint c;
        c.a.assign(static_cast<size_t>(diag.d + 1), Rational(0));
        c.a[static_cast<size_t>(k)] = 1;
        c.rel = Rel::ge;
        c.rhs = 0;
        cons.push_back(std::move(c));
    }
    rep.interior = lp_feasible(diag.d + 1, cons).feasible;

    rep.admissible = rep.normalization_ok && rep.full_rank && rep.interior;
    return rep;
}

NormalizedDiagram normalize_height_form(const ToricDiagram& diag) {
    Height h = require_height(diag);
    const long n = diag.dim;
    if (n < 2)
        fail(errc::invalid_argument, "height-form normalization needs dimension >= 2");

    // w = -ell * gamma, integral and primitive; U must have first row w.
    IntMatrix w(1, n);
    bool already_normal = true;
    for (long j = 0; j < n; ++j) {
        Rational e = Rational(-h.ell) * h.gamma[static_cast<size_t>(j)];
        w.at(0, j) = numerator(e);
        if (w.at(0, j) != (j == 0 ? 1 : 0))
            already_normal = false;
    }

    IntMatrix U;
    if (already_normal) {
        U = IntMatrix::identity(n);
    } else {
        // Smith form of the single row: w * V = +-e1^T, so V^{-1} has
        // first row +-w; fix signs and the determinant on other rows.
        SmithForm snf = smith_normal_form(w);
        IntMatrix V = snf.V;
        if (snf.U.at(0, 0) == -1)
            for (long i = 0; i < n; ++i)
                V.at(i, 0) = -V.at(i, 0);
        U = unimodular_inverse(V);
        if (U.det() != 1)
            U.negate_row(1);
    }

    // lambda'_i = U lambda_i (rows transform by U^T on the right).
    IntMatrix lambdas2 = diag.lambdas * U.transposed();
    for (long i = 0; i < diag.d; ++i)
        if (lambdas2.at(i, 0) != h.ell)
            fail(errc::invalid_argument, "normalized normals lost first coordinate ell (cannot happen)");

    std::vector<Rational> gamma2(static_cast<size_t>(n), Rational(0));
    gamma2[0] = Rational(-1, h.ell);

    NormalizedDiagram out;
    out.U = std::move(U);
    out.diag = ToricDiagram::make(std::move(lambdas2), std::move(gamma2), h.ell);
    return out;
}

} // namespace conemom
