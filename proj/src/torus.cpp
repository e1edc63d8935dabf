#include "paramconn/torus.hpp"

#include "paramconn/errors.hpp"

namespace pconn {

namespace {

IntMatrix mat_pow(const IntMatrix& m, long e) {
    IntMatrix acc = IntMatrix::identity(m.rows());
    IntMatrix base = m;
    for (; e > 0; e >>= 1) {
        if (e & 1) acc = acc * base;
        base = base * base;
    }
    return acc;
}

// I + m + m^2 + ... + m^{e-1}
IntMatrix geometric_sum(const IntMatrix& m, long e) {
    const std::size_t r = m.rows();
    IntMatrix sum(r, r);
    IntMatrix pw = IntMatrix::identity(r);
    for (long i = 0; i < e; ++i) {
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < r; ++b) sum.at(a, b) += pw.at(a, b);
        pw = pw * m;
    }
    return sum;
}

} // namespace

void TorusAction::validate() const {
    if (rank < 1) throw ValidationError("torus action: rank must be >= 1");
    if (s_star.rows() != rank || s_star.cols() != rank ||
        fr_star.rows() != rank || fr_star.cols() != rank)
        throw ValidationError("torus action: matrix dimensions do not match rank");
    if (b < 1) throw ValidationError("torus action: b must be >= 1");
    if (q < 1) throw ValidationError("torus action: q must be >= 1");
    if (q > 100000) throw CapacityError("torus action: q exceeds supported bound");
    mpz_class ds = s_star.determinant(), df = fr_star.determinant();
    if (ds != 1 && ds != -1)
        throw ValidationError("torus action: s_star is not invertible over Z");
    if (df != 1 && df != -1)
        throw ValidationError("torus action: fr_star is not invertible over Z");
    if (!mat_pow(s_star, b).is_identity())
        throw ValidationError("torus action: s_star^b is not the identity");
    long ql = static_cast<long>(q.get_si());
    if (fr_star * s_star != mat_pow(s_star, ql) * fr_star)
        throw ValidationError("torus action: Weil relation fr s fr^{-1} = s^q fails");
}

FgAbGroup cocycle_group(const TorusAction& act) {
    act.validate();
    const std::size_t r = act.rank;
    const long ql = static_cast<long>(act.q.get_si());
    IntMatrix sq = mat_pow(act.s_star, ql);
    IntMatrix gq = geometric_sum(act.s_star, ql);
    IntMatrix gb = geometric_sum(act.s_star, act.b);

    IntMatrix M(2 * r, 2 * r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            M.at(i, j) = (i == j ? 1 : 0) - sq.at(i, j);
            M.at(i, r + j) = act.fr_star.at(i, j) - gq.at(i, j);
            M.at(r + i, r + j) = gb.at(i, j);
        }
    }
    return cokernel(M);
}

bool is_connected_over(const FgAbGroup& g, const std::vector<long>& inverted_primes) {
    mpz_class ord = g.torsion_order();
    for (long ell : inverted_primes)
        if (ord % ell == 0) return false;
    return true;
}

} // namespace pconn
