#include "conemom/lp.hpp"
#include "conemom/errors.hpp"

#include <cstddef>

namespace conemom {

namespace {

// Standard-form tableau for phase 1: minimize the sum of artificials
// subject to Ay = b, y >= 0, b >= 0.  Row 0 is the objective (reduced
// costs, with the current -objective value in the last column); rows
// 1..m are the constraints.  basis[i] is the variable basic in row i+1.
struct Tableau {
    std::vector<std::vector<Rational>> t;
    std::vector<long> basis;
    long ncols; // structural + slack + artificial columns, excluding rhs

    Rational& at(long i, long j) { return t[static_cast<size_t>(i)][static_cast<size_t>(j)]; }

    void pivot(long prow, long pcol) {
        const Rational piv = at(prow, pcol);
        std::vector<Rational>& pr = t[static_cast<size_t>(prow)];
        for (Rational& v : pr)
            v /= piv;
        for (size_t i = 0; i < t.size(); ++i) {
            if (static_cast<long>(i) == prow)
                continue;
            Rational f = t[i][static_cast<size_t>(pcol)];
            if (f == 0)
                continue;
            for (size_t j = 0; j < t[i].size(); ++j)
                t[i][j] -= f * pr[j];
        }
        basis[static_cast<size_t>(prow - 1)] = pcol;
    }

    // Bland's rule: entering = lowest-index column with negative reduced
    // cost, leaving = among minimum-ratio rows the one whose basic
    // variable has the lowest index.  Guarantees termination.
    void solve() {
        const long m = static_cast<long>(t.size()) - 1;
        while (true) {
            long enter = -1;
            for (long j = 0; j < ncols; ++j)
                if (at(0, j) < 0) {
                    enter = j;
                    break;
                }
            if (enter < 0)
                return;
            long leave = -1;
            Rational best;
            for (long i = 1; i <= m; ++i) {
                const Rational& a = at(i, enter);
                if (a <= 0)
                    continue;
                Rational ratio = at(i, ncols) / a;
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[static_cast<size_t>(i - 1)] < basis[static_cast<size_t>(leave - 1)])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave < 0)
                fail(errc::invalid_argument, "phase-1 objective unbounded (cannot happen)");
            pivot(leave, enter);
        }
    }
};

} // namespace

LpFeasibility lp_feasible(long nvars, const std::vector<Constraint>& cons) {
    if (nvars < 1)
        fail(errc::invalid_argument, "lp_feasible needs at least one variable");
    for (const Constraint& c : cons)
        if (static_cast<long>(c.a.size()) != nvars)
            fail(errc::invalid_argument, "constraint coefficient count does not match nvars");

    const long m = static_cast<long>(cons.size());
    if (m == 0)
        return {true, std::vector<Rational>(static_cast<size_t>(nvars), Rational(0))};

    // Free variables are split as x = u - v with u, v >= 0.  Each <= row
    // gets a slack, each >= row a surplus; rows that cannot start with a
    // basic slack get an artificial.  All rhs are normalized >= 0 first.
    long nslack = 0, nart = 0;
    std::vector<Rel> rel(static_cast<size_t>(m));
    std::vector<int> flip(static_cast<size_t>(m), 0);
    for (long i = 0; i < m; ++i) {
        Rel r = cons[static_cast<size_t>(i)].rel;
        if (cons[static_cast<size_t>(i)].rhs < 0) {
            flip[static_cast<size_t>(i)] = 1;
            r = r == Rel::le ? Rel::ge : (r == Rel::ge ? Rel::le : Rel::eq);
        }
        rel[static_cast<size_t>(i)] = r;
        if (r != Rel::eq)
            ++nslack;
        if (r != Rel::le)
            ++nart;
    }

    const long ncols = 2 * nvars + nslack + nart;
    Tableau tab;
    tab.ncols = ncols;
    tab.basis.assign(static_cast<size_t>(m), -1);
    tab.t.assign(static_cast<size_t>(m + 1), std::vector<Rational>(static_cast<size_t>(ncols + 1), Rational(0)));

    long slack_at = 2 * nvars, art_at = 2 * nvars + nslack;
    for (long i = 0; i < m; ++i) {
        const Constraint& c = cons[static_cast<size_t>(i)];
        const Rational sgn = flip[static_cast<size_t>(i)] ? Rational(-1) : Rational(1);
        for (long k = 0; k < nvars; ++k) {
            Rational v = sgn * c.a[static_cast<size_t>(k)];
            tab.at(i + 1, 2 * k) = v;
            tab.at(i + 1, 2 * k + 1) = -v;
        }
        tab.at(i + 1, ncols) = sgn * c.rhs;
        switch (rel[static_cast<size_t>(i)]) {
        case Rel::le:
            tab.at(i + 1, slack_at) = 1;
            tab.basis[static_cast<size_t>(i)] = slack_at++;
            break;
        case Rel::ge:
            tab.at(i + 1, slack_at++) = -1;
            tab.at(i + 1, art_at) = 1;
            tab.basis[static_cast<size_t>(i)] = art_at++;
            break;
        case Rel::eq:
            tab.at(i + 1, art_at) = 1;
            tab.basis[static_cast<size_t>(i)] = art_at++;
            break;
        }
    }

    // Phase-1 reduced costs: cost 1 on each artificial, priced out so the
    // starting basis has zero reduced cost on its own columns.
    for (long i = 0; i < m; ++i)
        if (rel[static_cast<size_t>(i)] != Rel::le)
            for (long j = 0; j <= ncols; ++j)
                tab.at(0, j) -= tab.at(i + 1, j);
    for (long j = 2 * nvars + nslack; j < ncols; ++j)
        tab.at(0, j) += 1;

    tab.solve();

    // Objective value = -(entry in the corner); feasible iff it is zero.
    if (tab.at(0, ncols) != 0)
        return {false, {}};

    std::vector<Rational> split(static_cast<size_t>(2 * nvars), Rational(0));
    for (long i = 0; i < m; ++i) {
        long b = tab.basis[static_cast<size_t>(i)];
        if (b < 2 * nvars)
            split[static_cast<size_t>(b)] = tab.at(i + 1, ncols);
    }
    LpFeasibility out;
    out.feasible = true;
    out.point.resize(static_cast<size_t>(nvars));
    for (long k = 0; k < nvars; ++k)
        out.point[static_cast<size_t>(k)] = split[static_cast<size_t>(2 * k)] - split[static_cast<size_t>(2 * k + 1)];
    return out;
}

} // namespace conemom
