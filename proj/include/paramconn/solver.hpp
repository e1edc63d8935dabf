#pragma once

#include "paramconn/int_matrix.hpp"
#include "paramconn/qz.hpp"

#include <optional>

namespace pconn {

/// Decide B * x == prime_to_part(b, ell) in Q/Z, with every denominator of x
/// coprime to ell when ell > 0, and produce a canonical witness.
///
/// Route: Smith form U*B*V = D, b' = U * prime_to_part(b, ell). Rows without a
/// nonzero diagonal entry must have b' == 0; rows with d_i != 0 are always
/// solvable in the prime-to-ell torsion of Q/Z. Free coordinates of the
/// transformed solution are set to 0, torsion coordinates take the least
/// nonnegative representative; the witness is V * y.
std::optional<QZVector> solve_affine_torsion(const IntMatrix& B, const QZVector& b,
                                             ResidueChar ell);

/// Independent certificate check: substitutes x and compares entrywise.
/// Shares only the value types and prime_to_part with the solver.
bool verify_solution(const IntMatrix& B, const QZVector& b, ResidueChar ell,
                     const QZVector& x);

/// Throws ValidationError unless ell is 0 or a prime.
void require_residue_char(ResidueChar ell);

} // namespace pconn
