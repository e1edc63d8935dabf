#pragma once

#include "paramconn/setup.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pconn {

/// sum_{i=0}^{n0*e-1} q^i mod n0. Requires every prime of n0 to divide q - 1;
/// the result is always zero under that hypothesis.
mpz_class congruence_sum_1(long n0, long e, const mpz_class& q);

/// sum_{i=0}^{n0*e-1} (n0*e-1-i) * q^i mod n0' where n0' = n0 for odd n0 and
/// n0/2 for even n0. Same hypothesis, always zero.
mpz_class congruence_sum_2(long n0, long e, const mpz_class& q);

/// Witness over char 0 when the common fixed subgroup of the translation parts
/// is a torus. Requires sigma_w and sigma_{w'} to commute; absent when the
/// fixed subgroup has torsion.
std::optional<EdgeWitness> helper_edge(const TypeASetup& setup, const Perm& w,
                                       const Perm& w_prime);

/// For sigma_w a single s-cycle of length n, produces a neighbor w' whose
/// s-cycles are shorter, together with a verified witness at a deterministic
/// prime ell dividing the cycle length and avoiding p and the inverted primes.
std::pair<Perm, EdgeWitness> split_cycle(const TypeASetup& setup, const Perm& w);

enum class ChainRule { helper, split_cycle, peel, hub };

std::string to_string(ChainRule rule);

struct ChainStep {
    Perm from, to;
    ChainRule rule = ChainRule::helper;
    EdgeWitness witness;
};

struct Chain {
    Perm w, base;
    std::vector<ChainStep> steps;
    /// Characteristics used by some step but not in setup.allowed; the chain
    /// is still valid as a certificate over the full coefficient domain.
    std::vector<ResidueChar> outside_chars;
};

/// Independent re-verification: endpoints link up and every witness checks.
bool verify_chain(const TypeASetup& setup, const Chain& chain);

/// Certified chain from w to the base vertex. Empty for w == base; a single
/// hub step when order(alpha) is a prime power; otherwise repeated cycle
/// splitting and peeling.
Chain chain_to_base(const TypeASetup& setup, const Perm& w);

} // namespace pconn
