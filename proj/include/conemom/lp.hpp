#pragma once

#include "conemom/rational.hpp"

#include <vector>

namespace conemom {

// Exact rational linear-programming feasibility.  The instances here are
// tiny (a dozen variables, a couple dozen constraints), so a textbook
// two-phase simplex over Rational with Bland's anti-cycling rule is both
// simple and fast, and never suffers the tolerance questions a floating
// point solver would raise.

enum class Rel { le, ge, eq };

// Dot(a, x) REL rhs over free (sign-unrestricted) variables x.
struct Constraint {
    std::vector<Rational> a;
    Rel rel;
    Rational rhs;
};

struct LpFeasibility {
    bool feasible = false;
    // A witness satisfying every constraint exactly; empty when infeasible.
    std::vector<Rational> point;
};

// Decides whether {x in Q^nvars : every constraint holds} is non-empty.
// Throws errc::invalid_argument on dimension mismatches.
LpFeasibility lp_feasible(long nvars, const std::vector<Constraint>& cons);

} // namespace conemom
