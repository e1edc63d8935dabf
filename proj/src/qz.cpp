#include "paramconn/qz.hpp"

#include "paramconn/errors.hpp"

#include <sstream>

namespace pconn {

QZ::QZ(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw ValidationError("QZ: zero denominator");
    mpz_class n = num, d = den;
    if (d < 0) { d = -d; n = -n; }
    mpz_class g = gcd(n, d);
    if (g > 1) { n /= g; d /= g; }
    mpz_fdiv_r(n.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t()); // 0 <= n < d
    if (n == 0) d = 1;
    num_ = n;
    den_ = d;
}

QZ QZ::parse(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return QZ(mpz_class(text), 1);
        mpz_class n(text.substr(0, slash));
        mpz_class d(text.substr(slash + 1));
        if (d == 0) throw ValidationError("QZ: zero denominator in \"" + text + "\"");
        return QZ(n, d);
    } catch (const std::invalid_argument&) {
        throw ValidationError("QZ: cannot parse \"" + text + "\"");
    }
}

QZ QZ::operator+(const QZ& o) const {
    return QZ(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QZ QZ::operator-(const QZ& o) const {
    return QZ(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

QZ QZ::operator-() const { return QZ(-num_, den_); }

QZ QZ::operator*(const mpz_class& k) const { return QZ(num_ * k, den_); }

bool QZ::operator<(const QZ& o) const {
    return num_ * o.den_ < o.num_ * den_;
}

std::string QZ::str() const {
    return num_.get_str() + "/" + den_.get_str();
}

QZ prime_to_part(const QZ& v, ResidueChar ell) {
    if (ell == 0) return v;
    if (ell < 2) throw ValidationError("prime_to_part: invalid characteristic");
    mpz_class lp = 1, d = v.den();
    while (d % ell == 0) { d /= ell; lp *= ell; }
    if (lp == 1) return v;
    if (d == 1) return QZ();
    // num/den = a/lp + b/d with b = num * lp^{-1} mod d.
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), lp.get_mpz_t(), d.get_mpz_t()) == 0)
        throw InternalError("prime_to_part: non-invertible prime power"); // unreachable
    return QZ(v.num() * inv, d);
}

QZVector prime_to_part(const QZVector& v, ResidueChar ell) {
    QZVector out;
    out.reserve(v.size());
    for (const auto& e : v) out.push_back(prime_to_part(e, ell));
    return out;
}

bool den_coprime_to(const QZ& v, ResidueChar ell) {
    if (ell == 0) return true;
    return v.den() % ell != 0;
}

QZVector apply(const IntMatrix& B, const QZVector& x) {
    if (B.cols() != x.size())
        throw ValidationError("apply: dimension mismatch");
    QZVector out(B.rows());
    for (std::size_t i = 0; i < B.rows(); ++i) {
        QZ acc;
        for (std::size_t j = 0; j < B.cols(); ++j) {
            if (B.at(i, j) == 0) continue;
            acc = acc + x[j] * B.at(i, j);
        }
        out[i] = acc;
    }
    return out;
}

std::string to_string(const QZVector& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i].str();
    }
    os << ")";
    return os.str();
}

} // namespace pconn
