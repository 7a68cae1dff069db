#include "conemom/intmatrix.hpp"
#include "conemom/errors.hpp"

#include <utility>

namespace conemom {

IntMatrix IntMatrix::identity(long n) {
    IntMatrix m(n, n);
    for (long i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty())
        return IntMatrix();
    IntMatrix m(static_cast<long>(rows.size()), static_cast<long>(rows[0].size()));
    for (long i = 0; i < m.rows(); ++i) {
        if (rows[static_cast<size_t>(i)].size() != static_cast<size_t>(m.cols()))
            fail(errc::invalid_argument, "ragged rows in matrix literal");
        for (long j = 0; j < m.cols(); ++j)
            m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return m;
}

std::vector<Int> IntMatrix::row(long i) const {
    std::vector<Int> r(static_cast<size_t>(cols_));
    for (long j = 0; j < cols_; ++j)
        r[static_cast<size_t>(j)] = at(i, j);
    return r;
}

IntMatrix IntMatrix::select_rows(const std::vector<int>& idx) const {
    IntMatrix m(static_cast<long>(idx.size()), cols_);
    for (size_t k = 0; k < idx.size(); ++k)
        for (long j = 0; j < cols_; ++j)
            m.at(static_cast<long>(k), j) = at(idx[k], j);
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix m(cols_, rows_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j)
            m.at(j, i) = at(i, j);
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_)
        fail(errc::invalid_argument, "matrix product shape mismatch");
    IntMatrix m(rows_, o.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long k = 0; k < cols_; ++k) {
            if (at(i, k) == 0)
                continue;
            for (long j = 0; j < o.cols_; ++j)
                m.at(i, j) += at(i, k) * o.at(k, j);
        }
    return m;
}

std::vector<Int> IntMatrix::operator*(const std::vector<Int>& v) const {
    if (static_cast<long>(v.size()) != cols_)
        fail(errc::invalid_argument, "matrix-vector shape mismatch");
    std::vector<Int> r(static_cast<size_t>(rows_));
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j)
            r[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
    return r;
}

void IntMatrix::swap_rows(long i, long j) {
    if (i == j) return;
    for (long k = 0; k < cols_; ++k)
        std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(long i, long j) {
    if (i == j) return;
    for (long k = 0; k < rows_; ++k)
        std::swap(at(k, i), at(k, j));
}

void IntMatrix::add_row(long i, long j, const Int& q) {
    for (long k = 0; k < cols_; ++k)
        at(i, k) += q * at(j, k);
}

void IntMatrix::add_col(long i, long j, const Int& q) {
    for (long k = 0; k < rows_; ++k)
        at(k, i) += q * at(k, j);
}

void IntMatrix::negate_row(long i) {
    for (long k = 0; k < cols_; ++k)
        at(i, k) = -at(i, k);
}

Int IntMatrix::det() const {
    if (rows_ != cols_)
        fail(errc::invalid_argument, "determinant of non-square matrix");
    long n = rows_;
    if (n == 0)
        return 1;
    IntMatrix m(*this);
    Int prev(1);
    int sgn = 1;
    for (long k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            long p = -1;
            for (long i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { p = i; break; }
            if (p < 0)
                return 0;
            m.swap_rows(k, p);
            sgn = -sgn;
        }
        for (long i = k + 1; i < n; ++i)
            for (long j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    Int d = m.at(n - 1, n - 1);
    return sgn > 0 ? d : Int(-d);
}

long SmithForm::rank() const {
    long r = 0;
    for (const Int& d : divisors)
        if (d != 0)
            ++r;
    return r;
}

SmithForm smith_normal_form(const IntMatrix& M) {
    long r = M.rows(), c = M.cols();
    SmithForm out;
    out.U = IntMatrix::identity(r);
    out.V = IntMatrix::identity(c);
    IntMatrix D(M);
    long n = std::min(r, c);

    for (long t = 0; t < n; ++t) {
        for (;;) {
            // Smallest non-zero entry of the trailing block becomes the pivot.
            long pi = -1, pj = -1;
            for (long i = t; i < r; ++i)
                for (long j = t; j < c; ++j)
                    if (D.at(i, j) != 0 &&
                        (pi < 0 || abs(D.at(i, j)) < abs(D.at(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0)
                goto done; // trailing block is zero
            D.swap_rows(t, pi);
            out.U.swap_rows(t, pi);
            D.swap_cols(t, pj);
            out.V.swap_cols(t, pj);

            bool clean = true;
            for (long i = t + 1; i < r; ++i)
                if (D.at(i, t) != 0) {
                    Int q = D.at(i, t) / D.at(t, t);
                    if (q != 0) {
                        D.add_row(i, t, -q);
                        out.U.add_row(i, t, -q);
                    }
                    if (D.at(i, t) != 0)
                        clean = false;
                }
            for (long j = t + 1; j < c; ++j)
                if (D.at(t, j) != 0) {
                    Int q = D.at(t, j) / D.at(t, t);
                    if (q != 0) {
                        D.add_col(j, t, -q);
                        out.V.add_col(j, t, -q);
                    }
                    if (D.at(t, j) != 0)
                        clean = false;
                }
            if (!clean)
                continue; // residues smaller than the pivot remain; re-pick

            // Divisor chain: drag any non-divisible entry into row t and loop.
            bool divides_all = true;
            for (long i = t + 1; i < r && divides_all; ++i)
                for (long j = t + 1; j < c; ++j)
                    if (D.at(i, j) % D.at(t, t) != 0) {
                        D.add_row(t, i, Int(1));
                        out.U.add_row(t, i, Int(1));
                        divides_all = false;
                        break;
                    }
            if (divides_all)
                break;
        }
    }
done:
    for (long t = 0; t < n; ++t)
        if (D.at(t, t) < 0) {
            D.negate_row(t);
            out.U.negate_row(t);
        }
    out.divisors.resize(static_cast<size_t>(n));
    for (long t = 0; t < n; ++t)
        out.divisors[static_cast<size_t>(t)] = D.at(t, t);
    return out;
}

long rank_of(const IntMatrix& M) {
    long r = M.rows(), c = M.cols();
    std::vector<std::vector<Rational>> a(static_cast<size_t>(r),
                                         std::vector<Rational>(static_cast<size_t>(c)));
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < c; ++j)
            a[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rational(M.at(i, j));
    long rank = 0;
    for (long j = 0; j < c && rank < r; ++j) {
        long p = -1;
        for (long i = rank; i < r; ++i)
            if (a[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0) { p = i; break; }
        if (p < 0)
            continue;
        std::swap(a[static_cast<size_t>(rank)], a[static_cast<size_t>(p)]);
        for (long i = rank + 1; i < r; ++i) {
            Rational f = a[static_cast<size_t>(i)][static_cast<size_t>(j)] /
                         a[static_cast<size_t>(rank)][static_cast<size_t>(j)];
            if (f == 0)
                continue;
            for (long k = j; k < c; ++k)
                a[static_cast<size_t>(i)][static_cast<size_t>(k)] -=
                    f * a[static_cast<size_t>(rank)][static_cast<size_t>(k)];
        }
        ++rank;
    }
    return rank;
}

IntMatrix unimodular_inverse(const IntMatrix& U) {
    Int d = U.det();
    if (d != 1 && d != -1)
        fail(errc::invalid_argument, "matrix is not unimodular");
    long n = U.rows();
    // Exact Gauss-Jordan over Q; entries of the inverse are integers because
    // |det| = 1.
    std::vector<std::vector<Rational>> a(static_cast<size_t>(n),
                                         std::vector<Rational>(static_cast<size_t>(2 * n)));
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j)
            a[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rational(U.at(i, j));
        a[static_cast<size_t>(i)][static_cast<size_t>(n + i)] = 1;
    }
    for (long col = 0; col < n; ++col) {
        long p = -1;
        for (long i = col; i < n; ++i)
            if (a[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) { p = i; break; }
        std::swap(a[static_cast<size_t>(col)], a[static_cast<size_t>(p)]);
        Rational piv = a[static_cast<size_t>(col)][static_cast<size_t>(col)];
        for (long k = 0; k < 2 * n; ++k)
            a[static_cast<size_t>(col)][static_cast<size_t>(k)] /= piv;
        for (long i = 0; i < n; ++i) {
            if (i == col)
                continue;
            Rational f = a[static_cast<size_t>(i)][static_cast<size_t>(col)];
            if (f == 0)
                continue;
            for (long k = 0; k < 2 * n; ++k)
                a[static_cast<size_t>(i)][static_cast<size_t>(k)] -=
                    f * a[static_cast<size_t>(col)][static_cast<size_t>(k)];
        }
    }
    IntMatrix inv(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            Rational v = a[static_cast<size_t>(i)][static_cast<size_t>(n + j)];
            if (denominator(v) != 1)
                fail(errc::invalid_argument, "inverse of unimodular matrix came out fractional");
            inv.at(i, j) = numerator(v);
        }
    return inv;
}

} // namespace conemom
