#pragma once

#include "conemom/rational.hpp"

#include <vector>

namespace conemom {

// Dense integer matrix, row-major.  Sizes here are tiny (facet counts and
// torus ranks), so everything is exact and O(n^3)-ish without apology.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(long rows, long cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows * cols)) {}

    static IntMatrix identity(long n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    Int& at(long i, long j) { return a_[static_cast<size_t>(i * cols_ + j)]; }
    const Int& at(long i, long j) const { return a_[static_cast<size_t>(i * cols_ + j)]; }

    std::vector<Int> row(long i) const;
    IntMatrix select_rows(const std::vector<int>& idx) const;
    IntMatrix transposed() const;

    IntMatrix operator*(const IntMatrix& o) const;
    std::vector<Int> operator*(const std::vector<Int>& v) const;
    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    void swap_rows(long i, long j);
    void swap_cols(long i, long j);
    // row_i += q * row_j, col_i += q * col_j
    void add_row(long i, long j, const Int& q);
    void add_col(long i, long j, const Int& q);
    void negate_row(long i);

    // Bareiss fraction-free determinant; square matrices only.
    Int det() const;

private:
    long rows_, cols_;
    std::vector<Int> a_;
};

// U * M * V = diag(divisors), with U, V unimodular and divisors
// non-negative, each dividing the next.  The divisor list has length
// min(rows, cols), padded with zeros past the rank.
struct SmithForm {
    std::vector<Int> divisors;
    IntMatrix U, V;
    long rank() const;
};

SmithForm smith_normal_form(const IntMatrix& M);

// Rank over Q by exact Gaussian elimination (independent of the Smith
// form, which makes it usable as a cross-check).
long rank_of(const IntMatrix& M);

// Exact inverse of a unimodular matrix; throws unless |det| = 1.
IntMatrix unimodular_inverse(const IntMatrix& U);

} // namespace conemom
