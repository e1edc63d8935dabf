#pragma once

#include "paramconn/int_matrix.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace pconn {

/// A residue in Q/Z kept as a reduced fraction num/den with 0 <= num < den.
/// Encodes the root of unity e(num/den); the multiplicative order is den.
class QZ {
  public:
    QZ() : num_(0), den_(1) {}
    QZ(const mpz_class& num, const mpz_class& den);

    static QZ parse(const std::string& text); // "num/den" or "num"

    const mpz_class& num() const { return num_; }
    const mpz_class& den() const { return den_; }
    const mpz_class& order() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    QZ operator+(const QZ& o) const;
    QZ operator-(const QZ& o) const;
    QZ operator-() const;
    QZ operator*(const mpz_class& k) const;
    bool operator==(const QZ& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const QZ& o) const { return !(*this == o); }
    bool operator<(const QZ& o) const;

    std::string str() const; // "num/den"

  private:
    mpz_class num_, den_;
};

using QZVector = std::vector<QZ>;

/// Residue characteristic: 0 or a prime.
using ResidueChar = long;

/// Component of v of order coprime to ell under Z/den = Z/ell^v x Z/(den/ell^v).
/// Identity for ell = 0. Models specialization of a root of unity to
/// characteristic ell, where the ell-power part collapses to 1.
QZ prime_to_part(const QZ& v, ResidueChar ell);
QZVector prime_to_part(const QZVector& v, ResidueChar ell);

/// True when ell == 0 or gcd(den, ell) == 1.
bool den_coprime_to(const QZ& v, ResidueChar ell);

/// B * x in Q/Z (B integer, x residues); rows(B) results.
QZVector apply(const IntMatrix& B, const QZVector& x);

std::string to_string(const QZVector& v);

} // namespace pconn
