#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace pconn {

/// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpz_class& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const;

    IntMatrix transposed() const;
    bool is_identity() const;
    bool is_zero() const;

    /// Exact determinant (square matrices; cofactor expansion, small dims only).
    mpz_class determinant() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row a += c * row b
    void add_row_multiple(std::size_t a, std::size_t b, const mpz_class& c);
    /// col a += c * col b
    void add_col_multiple(std::size_t a, std::size_t b, const mpz_class& c);
    void negate_row(std::size_t a);
    void negate_col(std::size_t a);

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<mpz_class> e_;
};

/// U * M * V == D with U, V unimodular and D diagonal, nonnegative,
/// d1 | d2 | ... | dr, trailing entries zero.
struct SmithDecomposition {
    IntMatrix U, D, V;
    std::size_t rank() const;
    std::vector<mpz_class> invariant_factors() const; // nonzero diagonal entries
};

/// Finitely generated abelian group in canonical form: Z^free_rank + sum Z/d_i.
struct FgAbGroup {
    std::size_t free_rank = 0;
    std::vector<mpz_class> torsion; // invariant factors >= 2, d1 | d2 | ...

    mpz_class torsion_order() const;
    bool operator==(const FgAbGroup& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
};

/// Deterministic Smith normal form. Pivot is the smallest nonzero absolute
/// value, ties broken by lowest (row, col).
SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Canonical form of Z^rows / (column span of m).
FgAbGroup cokernel(const IntMatrix& m);

} // namespace pconn
