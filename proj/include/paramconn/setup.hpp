#pragma once

#include "paramconn/int_matrix.hpp"
#include "paramconn/perm.hpp"
#include "paramconn/qz.hpp"
#include "paramconn/solver.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace pconn {

/// Residue characteristics available in the coefficient domain. Either the
/// full set {0} u {primes not inverted, != p}, or an explicit finite list.
struct AllowedChars {
    bool include_zero = true;
    bool all_primes = true;      // every prime not inverted and != p
    std::vector<long> listed;    // used when !all_primes; sorted primes

    static AllowedChars all();
    static AllowedChars ell_adic(long ell); // {0, ell}
    static AllowedChars fbar(long ell);     // {ell}
    static AllowedChars explicit_list(std::vector<long> chars); // may contain 0
};

/// Input before orbit collapse and central-constant normalization.
struct RawSetup {
    std::size_t n = 0;       // rank of each SL_n factor
    std::size_t m = 1;       // number of factors
    std::size_t a = 1;       // number of s-orbits on factors
    mpz_class q;             // power of p
    long p = 0;              // excluded residue characteristic
    Outer eps_s = Outer::plus;
    Outer eps_fr = Outer::plus;
    QZ alpha_raw;            // exponent of the central constant, den | n
    std::vector<long> inverted_primes;
    AllowedChars allowed;
};

/// Normalized setup the engine computes with.
struct TypeASetup {
    std::size_t n = 0;
    mpz_class q_eff;         // q^a
    long p = 0;
    Outer eps_s = Outer::plus;
    Outer eps_fr = Outer::plus;
    QZ alpha;                // normalized central exponent, order n0
    mpz_class Q;             // eps_fr * q_eff
    std::vector<long> inverted_primes;
    AllowedChars allowed;

    bool in_inverted(long ell) const;
    bool allows_char(ResidueChar ell) const;
    Perm base_vertex() const; // Fr as element of W0
};

/// A common torsion point of S_w and S_{w'} at a stated characteristic.
struct EdgeWitness {
    Perm w, w_prime;
    ResidueChar chr = 0;
    QZVector point;
};

/// Orbit collapse (replace q by q^a) followed by central-constant
/// normalization. Validates the raw invariants.
TypeASetup reduce_setup(const RawSetup& raw);

/// Canonical translate alpha_raw + (Q-1)*y, n*y == 0, whose order is supported
/// on primes dividing q_eff - eps_fr and avoids the inverted primes; least
/// order first, then least numerator.
QZ normalize_alpha(const QZ& alpha_raw, std::size_t n, const mpz_class& q_eff,
                   Outer eps_fr, const std::vector<long>& inverted_primes, long p);

/// Stacked eigenvalue systems: for each w and each coordinate j one row
///   x_{sigma_w^{-1}(j)} - Q * x_j == -alpha  (mod 1),
/// plus the determinant-one row sum_j x_j == 0.
std::pair<IntMatrix, QZVector> build_system(const TypeASetup& setup,
                                            const std::vector<Perm>& ws);

/// Witness for S_w and S_{w'} meeting over characteristic ell, if any.
std::optional<EdgeWitness> direct_edge(const TypeASetup& setup, const Perm& w,
                                       const Perm& w_prime, ResidueChar ell);

/// {0} u {primes dividing order(alpha)}, intersected with allowed_chars.
std::vector<ResidueChar> candidate_chars(const TypeASetup& setup);

/// When order(alpha) is a prime power ell^k with ell available, the zero point
/// lies in every S_w over characteristic ell; returns (ell, zero point).
std::optional<std::pair<ResidueChar, QZVector>> prime_power_alpha_hub(
    const TypeASetup& setup);

/// Independent checker: the point satisfies both the S_w and the S_{w'}
/// system at the stated characteristic.
bool verify_edge_witness(const TypeASetup& setup, const EdgeWitness& witness);

/// Checker for a W0-translated intersection: point in S_w and in v * S_{w'}.
bool verify_translated_edge(const TypeASetup& setup, const Perm& v, const Perm& w,
                            const Perm& w_prime, ResidueChar ell, const QZVector& point);

/// Searches v in W0 for a common point of S_w and the v-translate of S_{w'}.
/// Only supported for eps_s = +1, where the twisted action on coordinates is
/// the plain permutation action.
std::optional<std::pair<Perm, EdgeWitness>> exact_images_edge(const TypeASetup& setup,
                                                              const Perm& w,
                                                              const Perm& w_prime,
                                                              ResidueChar ell);

} // namespace pconn
