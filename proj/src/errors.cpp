#include "conemom/errors.hpp"

namespace conemom {

const char* errc_name(errc c) {
    switch (c) {
    case errc::invalid_argument:           return "InvalidArgument";
    case errc::zero_polynomial:            return "ZeroPolynomial";
    case errc::non_positive_scale:         return "NonPositiveScale";
    case errc::pole_at_minus_one:          return "PoleAtMinusOne";
    case errc::degenerate_boundary:        return "DegenerateBoundary";
    case errc::not_positive_near_zero:     return "NotPositiveNearZero";
    case errc::degenerate_profile:         return "DegenerateProfile";
    case errc::sign_assumption_failed:     return "SignAssumptionFailed";
    case errc::outside_domain:             return "OutsideDomain";
    case errc::outside_range:              return "OutsideRange";
    case errc::quadrature_budget_exceeded: return "QuadratureBudgetExceeded";
    case errc::pole_in_domain:             return "PoleInDomain";
    case errc::empty_interior:             return "EmptyInterior";
    case errc::too_many_facets:            return "TooManyFacets";
    case errc::ambiguous_gamma:            return "AmbiguousGamma";
    case errc::branch_cut_hit:             return "BranchCutHit";
    }
    return "Unknown";
}

} // namespace conemom
