#pragma once

#include "conemom/intmatrix.hpp"
#include "conemom/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace conemom {

// Toric cone data: d facet normals lambda_i in Z^dim (rows of `lambdas`),
// optionally the characteristic covector gamma with <gamma, lambda_i> = -1
// and the height ell (least positive integer making ell*gamma integral,
// which is then required to be primitive).
struct ToricDiagram {
    long dim = 0;
    long d = 0;
    IntMatrix lambdas;
    std::optional<std::vector<Rational>> gamma;
    std::optional<long> ell;

    // Validates all stated invariants; throws errc::invalid_argument with a
    // specific message (non-primitive row, wrong pairing, imprimitive
    // ell*gamma, ...).
    static ToricDiagram make(IntMatrix lambdas,
                             std::optional<std::vector<Rational>> gamma = std::nullopt,
                             std::optional<long> ell = std::nullopt);
};

struct ReebVector {
    std::vector<Rational> xi;
};

struct PrimitiveMinimalReport {
    bool primitive = false;
    long bad_primitive_row = -1; // first row with entry gcd > 1, else -1
    bool minimal = false;
    long redundant_row = -1; // first row implied by the others, else -1
    bool ok() const { return primitive && minimal; }
};

// Primitivity by row gcd; minimality by exact LP: row j is essential iff
// some y has <y, lambda_j> <= -1 while <y, lambda_i> >= 0 for i != j.
// Throws errc::empty_interior when no y has every <y, lambda_i> >= 1.
PrimitiveMinimalReport check_primitive_minimal(const ToricDiagram& diag);

struct FaceViolation {
    std::vector<int> subset;     // facet indices, ascending
    bool independent = false;    // Z-linear independence of the rows
    std::vector<Int> divisors;   // Smith divisors of the subset matrix
    bool apex_only = false;      // face meets the cone only at the origin
};

struct GoodnessCertificate {
    // Primary verdict: every facet subset must span a saturated sublattice
    // (Smith divisors all 1), including subsets whose face is the apex.
    bool good = false;
    // Verdict when apex-only subsets are skipped.  Skipping checks fewer
    // subsets, so good implies good_excluding_apex; when only the apex
    // reading fails the two verdicts disagree and we flag it.
    bool good_excluding_apex = false;
    bool readings_disagree = false;
    long subsets_checked = 0;
    std::optional<FaceViolation> first_violation; // smallest size, then lex
};

// Brute-force subset scan with cap `facet_cap` (errc::too_many_facets
// beyond it).  Requires check_primitive_minimal to pass.
GoodnessCertificate check_good(const ToricDiagram& diag, long facet_cap = 14);

struct Height {
    std::vector<Rational> gamma;
    long ell = 0;
};

struct HeightResult {
    enum class Status { found, inconsistent, ambiguous };
    Status status = Status::inconsistent;
    std::optional<Height> height; // present iff status == found
    std::string note;
};

// Solves <gamma, lambda_i> = -1 exactly.  A positive-dimensional solution
// space reports Status::ambiguous (the data does not determine gamma); an
// unsolvable system reports Status::inconsistent.
HeightResult compute_height(const ToricDiagram& diag);

struct ReebReport {
    bool normalization_ok = false; // <gamma, xi> == -dim
    bool full_rank = false;        // rank of the normal matrix == dim
    bool interior = false;         // xi in the interior of cone(lambda_i)
    bool admissible = false;
    std::vector<Rational> gamma;
    long ell = 0;
};

// Requires compute_height to succeed (throws errc::ambiguous_gamma or
// errc::invalid_argument otherwise).  Interiority is an exact LP: some
// positive rescaling of xi is a strictly positive combination of the
// normals.
ReebReport reeb_admissible(const ToricDiagram& diag, const ReebVector& xi);

struct NormalizedDiagram {
    IntMatrix U; // in SL(dim, Z)
    ToricDiagram diag;
};

// Change of basis making gamma' = (-1/ell, 0, ..., 0); every transformed
// normal then has first coordinate ell.  U is the identity when the
// diagram is already in this form.
NormalizedDiagram normalize_height_form(const ToricDiagram& diag);

} // namespace conemom
