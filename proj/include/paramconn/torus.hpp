#pragma once

#include "paramconn/int_matrix.hpp"

#include <vector>

namespace pconn {

/// A finite tame action on a rank-r character lattice: s_star of order
/// dividing b, fr_star satisfying the Weil relation fr s fr^{-1} = s^q.
struct TorusAction {
    std::size_t rank = 0;
    IntMatrix s_star, fr_star;
    mpz_class q;
    long b = 1;

    /// Throws ValidationError on any invariant violation.
    void validate() const;
};

/// Character group of the cocycle kernel scheme: the cokernel of the 2r x 2r
/// lattice matrix [[I - s^q, fr - sum_{i<q} s^i], [0, sum_{i<b} s^i]].
FgAbGroup cocycle_group(const TorusAction& act);

/// True iff no prime of the torsion order is inverted.
bool is_connected_over(const FgAbGroup& g, const std::vector<long>& inverted_primes);

} // namespace pconn
