#pragma once

#include <stdexcept>
#include <string>

namespace conemom {

enum class errc {
    invalid_argument,
    zero_polynomial,
    non_positive_scale,
    pole_at_minus_one,
    degenerate_boundary,
    not_positive_near_zero,
    degenerate_profile,
    sign_assumption_failed,
    outside_domain,
    outside_range,
    quadrature_budget_exceeded,
    pole_in_domain,
    empty_interior,
    too_many_facets,
    ambiguous_gamma,
    branch_cut_hit,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw Error(code, what);
}

} // namespace conemom
