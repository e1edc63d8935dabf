#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace pconn {

/// Outer automorphism class of the ambient rank-n situation: +1 or the flip.
enum class Outer : int { plus = 1, minus = -1 };

inline int sign_of(Outer e) { return static_cast<int>(e); }

/// Permutation of {1, ..., n}, stored one-indexed.
class Perm {
  public:
    Perm() = default;
    explicit Perm(std::size_t n); // identity
    explicit Perm(std::vector<int> images);

    std::size_t size() const { return images_.size(); }
    int apply(int i) const { return images_[static_cast<std::size_t>(i) - 1]; }
    int operator()(int i) const { return apply(i); }

    Perm inverse() const;
    Perm operator*(const Perm& rhs) const; // (a*b)(i) = a(b(i))
    bool operator==(const Perm& rhs) const { return images_ == rhs.images_; }
    bool operator!=(const Perm& rhs) const { return images_ != rhs.images_; }
    bool operator<(const Perm& rhs) const { return images_ < rhs.images_; }

    bool is_identity() const;

    /// The involution i -> n+1-i.
    static Perm flip(std::size_t n);

    /// Nontrivial cycles, each starting at its smallest element, ordered by
    /// smallest element.
    std::vector<std::vector<int>> cycle_list() const;

    /// Disjoint-cycle text form, "(1 2 3)(4 5 6)"; identity prints "()".
    std::string cycles() const;
    static std::optional<Perm> parse_cycles(const std::string& text, std::size_t n);

  private:
    std::vector<int> images_;
};

/// Single factor of the decomposition of an involution-compatible permutation:
/// a plain cycle (possibly stable under the flip) or a flip-paired double cycle.
struct SCycle {
    std::vector<int> first;  // orbit of its smallest moved point
    std::vector<int> second; // flip-conjugate partner; empty for a plain cycle

    bool paired() const { return !second.empty(); }
    std::size_t length() const { return first.size() + second.size(); }
    Perm as_perm(std::size_t n) const;
};

/// The involution induced by eps on {1, ..., n}: identity or the flip.
Perm induced_involution(std::size_t n, Outer eps);

bool commutes_with_involution(const Perm& p, Outer eps);

/// All of S_n for eps_s = +1; the centralizer of the flip for eps_s = -1.
/// Deterministic lexicographic order. Throws CapacityError for n > bound.
std::vector<Perm> enumerate_w0(std::size_t n, Outer eps_s,
                               std::size_t bound = 8);

/// The unique decomposition into disjoint s-cycles; fixed points omitted.
/// Throws ValidationError if sigma is not eps_s-compatible.
std::vector<SCycle> s_cycle_decomposition(const Perm& sigma, Outer eps_s);

/// Fr * w, where Fr is the involution induced by eps_fr.
Perm sigma_of(const Perm& w, Outer eps_fr);

bool is_single_scycle_full_length(const Perm& sigma, Outer eps_s);

} // namespace pconn
