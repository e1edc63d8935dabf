#include "paramconn/int_matrix.hpp"

#include "paramconn/errors.hpp"

#include <algorithm>
#include <utility>

namespace pconn {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_)
        throw ValidationError("IntMatrix: entry count does not match dimensions");
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw ValidationError("IntMatrix: dimension mismatch in product");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpz_class& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

bool IntMatrix::operator==(const IntMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && e_ == rhs.e_;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out.at(j, i) = at(i, j);
    return out;
}

bool IntMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool IntMatrix::is_zero() const {
    for (const auto& x : e_)
        if (x != 0) return false;
    return true;
}

mpz_class IntMatrix::determinant() const {
    if (rows_ != cols_)
        throw ValidationError("IntMatrix: determinant of non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    if (n == 1) return at(0, 0);
    // Fraction-free Gaussian elimination (Bareiss).
    IntMatrix a = *this;
    mpz_class sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a.at(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            a.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = num / prev; // exact by Bareiss
            }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::add_row_multiple(std::size_t a, std::size_t b, const mpz_class& c) {
    for (std::size_t j = 0; j < cols_; ++j) at(a, j) += c * at(b, j);
}

void IntMatrix::add_col_multiple(std::size_t a, std::size_t b, const mpz_class& c) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, a) += c * at(i, b);
}

void IntMatrix::negate_row(std::size_t a) {
    for (std::size_t j = 0; j < cols_; ++j) at(a, j) = -at(a, j);
}

void IntMatrix::negate_col(std::size_t a) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, a) = -at(i, a);
}

std::size_t SmithDecomposition::rank() const {
    std::size_t r = 0;
    const std::size_t n = std::min(D.rows(), D.cols());
    for (std::size_t i = 0; i < n; ++i)
        if (D.at(i, i) != 0) ++r;
    return r;
}

std::vector<mpz_class> SmithDecomposition::invariant_factors() const {
    std::vector<mpz_class> out;
    const std::size_t n = std::min(D.rows(), D.cols());
    for (std::size_t i = 0; i < n; ++i)
        if (D.at(i, i) != 0) out.push_back(D.at(i, i));
    return out;
}

mpz_class FgAbGroup::torsion_order() const {
    mpz_class o = 1;
    for (const auto& d : torsion) o *= d;
    return o;
}

namespace {

// Pivot search over the submatrix starting at (k, k): smallest nonzero
// absolute value, ties broken by lowest (row, col).
bool find_pivot(const IntMatrix& m, std::size_t k, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    mpz_class best;
    for (std::size_t i = k; i < m.rows(); ++i)
        for (std::size_t j = k; j < m.cols(); ++j) {
            const mpz_class& v = m.at(i, j);
            if (v == 0) continue;
            mpz_class a = abs(v);
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    SmithDecomposition s{IntMatrix::identity(rows), m, IntMatrix::identity(cols)};
    IntMatrix& D = s.D;
    IntMatrix& U = s.U;
    IntMatrix& V = s.V;

    const std::size_t nmin = std::min(rows, cols);
    for (std::size_t k = 0; k < nmin; ++k) {
        std::size_t pi = k, pj = k;
        if (!find_pivot(D, k, pi, pj)) break;
        if (pi != k) { D.swap_rows(k, pi); U.swap_rows(k, pi); }
        if (pj != k) { D.swap_cols(k, pj); V.swap_cols(k, pj); }

        for (;;) {
            // Clear column k below the pivot.
            bool dirty = false;
            for (std::size_t i = k + 1; i < rows; ++i) {
                if (D.at(i, k) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), D.at(i, k).get_mpz_t(), D.at(k, k).get_mpz_t());
                D.add_row_multiple(i, k, -q);
                U.add_row_multiple(i, k, -q);
                if (D.at(i, k) != 0) dirty = true;
            }
            // Clear row k right of the pivot.
            for (std::size_t j = k + 1; j < cols; ++j) {
                if (D.at(k, j) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), D.at(k, j).get_mpz_t(), D.at(k, k).get_mpz_t());
                D.add_col_multiple(j, k, -q);
                V.add_col_multiple(j, k, -q);
                if (D.at(k, j) != 0) dirty = true;
            }
            if (!dirty) {
                bool clean = true;
                for (std::size_t i = k + 1; i < rows && clean; ++i)
                    if (D.at(i, k) != 0) clean = false;
                for (std::size_t j = k + 1; j < cols && clean; ++j)
                    if (D.at(k, j) != 0) clean = false;
                if (clean) break;
            }
            // A remainder became the new smallest entry; re-pivot.
            std::size_t qi = k, qj = k;
            find_pivot(D, k, qi, qj);
            if (qi != k) { D.swap_rows(k, qi); U.swap_rows(k, qi); }
            if (qj != k) { D.swap_cols(k, qj); V.swap_cols(k, qj); }
        }

        if (D.at(k, k) < 0) {
            D.negate_row(k);
            U.negate_row(k);
        }
    }

    // Enforce the divisibility chain d_k | d_{k+1}.
    for (std::size_t k = 0; k + 1 < nmin; ++k) {
        for (std::size_t j = k + 1; j < nmin; ++j) {
            if (D.at(k, k) == 0) {
                // Zero before nonzero: swap into place.
                if (D.at(j, j) != 0) {
                    D.swap_rows(k, j); U.swap_rows(k, j);
                    D.swap_cols(k, j); V.swap_cols(k, j);
                }
                continue;
            }
            if (D.at(j, j) % D.at(k, k) == 0) continue;
            // Standard gcd trick: fold d_j into column k and re-reduce the 2x2 block.
            D.add_col_multiple(k, j, 1);
            V.add_col_multiple(k, j, 1);
            // Reduce the (k, j) block back to diagonal form.
            for (;;) {
                mpz_class q;
                if (D.at(j, k) != 0) {
                    mpz_fdiv_q(q.get_mpz_t(), D.at(j, k).get_mpz_t(), D.at(k, k).get_mpz_t());
                    D.add_row_multiple(j, k, -q);
                    U.add_row_multiple(j, k, -q);
                }
                if (D.at(j, k) == 0) break;
                D.swap_rows(k, j);
                U.swap_rows(k, j);
            }
            if (D.at(k, j) != 0) {
                mpz_class q = D.at(k, j) / D.at(k, k); // exact: d_k | entries now
                D.add_col_multiple(j, k, -q);
                V.add_col_multiple(j, k, -q);
            }
            if (D.at(k, k) < 0) { D.negate_row(k); U.negate_row(k); }
            if (D.at(j, j) < 0) { D.negate_row(j); U.negate_row(j); }
        }
    }

    return s;
}

FgAbGroup cokernel(const IntMatrix& m) {
    SmithDecomposition s = smith_normal_form(m);
    FgAbGroup g;
    g.free_rank = m.rows() - s.rank();
    for (const auto& d : s.invariant_factors())
        if (d >= 2) g.torsion.push_back(d);
    return g;
}

} // namespace pconn
