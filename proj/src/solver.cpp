#include "paramconn/solver.hpp"

#include "paramconn/errors.hpp"

namespace pconn {

void require_residue_char(ResidueChar ell) {
    if (ell == 0) return;
    if (ell < 2)
        throw ValidationError("residue characteristic must be 0 or a prime");
    mpz_class l(ell);
    if (mpz_probab_prime_p(l.get_mpz_t(), 30) == 0)
        throw ValidationError("residue characteristic " + std::to_string(ell) +
                              " is not prime");
}

namespace {

// Least-nonnegative y with d * y == t in the prime-to-ell torsion of Q/Z,
// where t already has denominator coprime to ell.
QZ divide_in_prime_to_ell(const mpz_class& d, const QZ& t, ResidueChar ell) {
    if (ell == 0) return QZ(t.num(), d * t.den());
    mpz_class lp = 1, dp = d;
    while (dp % ell == 0) { dp /= ell; lp *= ell; }
    mpz_class mod = t.den() * dp;
    if (mod == 1) return QZ();
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), lp.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw InternalError("divide_in_prime_to_ell: inversion failed"); // unreachable
    // y = (lp^{-1} mod den*dp) * num / (den*dp): then d*y == t mod 1.
    return QZ(inv * t.num(), mod);
}

} // namespace

std::optional<QZVector> solve_affine_torsion(const IntMatrix& B, const QZVector& b,
                                             ResidueChar ell) {
    if (B.rows() != b.size())
        throw ValidationError("solve_affine_torsion: rhs length does not match rows");
    require_residue_char(ell);

    const QZVector target = prime_to_part(b, ell);
    SmithDecomposition s = smith_normal_form(B);

    // b' = U * target
    QZVector bt = pconn::apply(s.U, target);

    const std::size_t cols = B.cols();
    const std::size_t nmin = std::min(B.rows(), cols);
    QZVector y(cols); // zeros; free coordinates stay 0
    for (std::size_t i = 0; i < B.rows(); ++i) {
        const mpz_class& d = (i < nmin) ? s.D.at(i, i) : mpz_class(0);
        if (d == 0) {
            if (!bt[i].is_zero()) return std::nullopt;
        } else {
            y[i] = divide_in_prime_to_ell(d, bt[i], ell);
        }
    }
    return pconn::apply(s.V, y);
}

bool verify_solution(const IntMatrix& B, const QZVector& b, ResidueChar ell,
                     const QZVector& x) {
    if (B.rows() != b.size() || B.cols() != x.size()) return false;
    for (const auto& e : x)
        if (!den_coprime_to(e, ell)) return false;
    const QZVector target = prime_to_part(b, ell);
    const QZVector got = pconn::apply(B, x);
    for (std::size_t i = 0; i < got.size(); ++i)
        if (got[i] != target[i]) return false;
    return true;
}

} // namespace pconn
