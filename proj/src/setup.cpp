#include "paramconn/setup.hpp"

#include "paramconn/errors.hpp"

#include <algorithm>

namespace pconn {

namespace {

std::vector<mpz_class> prime_factors(mpz_class v) {
    std::vector<mpz_class> out;
    if (v < 0) v = -v;
    for (mpz_class d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

bool is_power_of(const mpz_class& q, long p) {
    if (q < 1) return false;
    mpz_class v = q;
    while (v % p == 0) v /= p;
    return v == 1;
}

} // namespace

AllowedChars AllowedChars::all() { return AllowedChars{}; }

AllowedChars AllowedChars::ell_adic(long ell) {
    require_residue_char(ell);
    return AllowedChars{true, false, {ell}};
}

AllowedChars AllowedChars::fbar(long ell) {
    require_residue_char(ell);
    return AllowedChars{false, false, {ell}};
}

AllowedChars AllowedChars::explicit_list(std::vector<long> chars) {
    AllowedChars out{false, false, {}};
    for (long c : chars) {
        require_residue_char(c);
        if (c == 0)
            out.include_zero = true;
        else
            out.listed.push_back(c);
    }
    std::sort(out.listed.begin(), out.listed.end());
    out.listed.erase(std::unique(out.listed.begin(), out.listed.end()),
                     out.listed.end());
    return out;
}

bool TypeASetup::in_inverted(long ell) const {
    return std::find(inverted_primes.begin(), inverted_primes.end(), ell) !=
           inverted_primes.end();
}

bool TypeASetup::allows_char(ResidueChar ell) const {
    if (ell == 0) return allowed.include_zero;
    if (ell == p) return false;
    if (allowed.all_primes) return !in_inverted(ell);
    return std::find(allowed.listed.begin(), allowed.listed.end(), ell) !=
           allowed.listed.end();
}

Perm TypeASetup::base_vertex() const { return induced_involution(n, eps_fr); }

QZ normalize_alpha(const QZ& alpha_raw, std::size_t n, const mpz_class& q_eff,
                   Outer eps_fr, const std::vector<long>& inverted_primes, long p) {
    if (n == 0 || mpz_class(n) % alpha_raw.den() != 0)
        throw ValidationError("normalize_alpha: denominator of alpha must divide n");
    const mpz_class Q = sign_of(eps_fr) * q_eff;
    const mpz_class target = q_eff - sign_of(eps_fr);

    auto in_d = [&](const mpz_class& ell) {
        if (ell == p) return true;
        for (long ip : inverted_primes)
            if (ell == ip) return true;
        return false;
    };
    auto acceptable = [&](const QZ& cand) {
        for (const auto& ell : prime_factors(cand.order())) {
            if (in_d(ell)) return false;
            if (target != 0 && target % ell != 0) return false;
            if (target == 0) return false; // q_eff == eps_fr: only order 1 works
        }
        return true;
    };
    auto better = [](const QZ& a, const QZ& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.num() < b.num();
    };

    std::optional<QZ> best;
    for (std::size_t pass = 0; pass < 2 && !best; ++pass) {
        for (std::size_t k = 0; k < n; ++k) {
            QZ cand = alpha_raw + QZ(mpz_class(k), mpz_class(n)) * (Q - 1);
            if (pass == 1) {
                // Second pass: the D-part of the central constant can also be
                // split away, so strip inverted primes before testing.
                for (long ip : inverted_primes) cand = prime_to_part(cand, ip);
                cand = prime_to_part(cand, p);
            }
            if (!acceptable(cand)) continue;
            if (!best || better(cand, *best)) best = cand;
        }
    }
    if (!best)
        throw ValidationError("normalize_alpha: no admissible translate exists");
    return *best;
}

TypeASetup reduce_setup(const RawSetup& raw) {
    if (raw.n < 1) throw ValidationError("setup: n must be >= 1");
    if (raw.m < 1 || raw.a < 1 || raw.m % raw.a != 0)
        throw ValidationError("setup: a must divide m");
    require_residue_char(raw.p);
    if (raw.p < 2) throw ValidationError("setup: p must be prime");
    if (!is_power_of(raw.q, raw.p))
        throw ValidationError("setup: q must be a power of p");
    if (raw.eps_s == Outer::minus && raw.q % 2 == 0)
        throw ValidationError("setup: eps_s = -1 requires odd q");
    for (long ip : raw.inverted_primes) require_residue_char(ip);

    TypeASetup s;
    s.n = raw.n;
    s.p = raw.p;
    s.eps_s = raw.eps_s;
    s.eps_fr = raw.eps_fr;
    mpz_pow_ui(s.q_eff.get_mpz_t(), raw.q.get_mpz_t(), static_cast<unsigned long>(raw.a));
    s.inverted_primes = raw.inverted_primes;
    std::sort(s.inverted_primes.begin(), s.inverted_primes.end());
    s.inverted_primes.erase(
        std::unique(s.inverted_primes.begin(), s.inverted_primes.end()),
        s.inverted_primes.end());
    s.allowed = raw.allowed;
    s.Q = sign_of(raw.eps_fr) * s.q_eff;
    s.alpha = normalize_alpha(raw.alpha_raw, raw.n, s.q_eff, raw.eps_fr,
                              s.inverted_primes, raw.p);
    return s;
}

std::pair<IntMatrix, QZVector> build_system(const TypeASetup& setup,
                                            const std::vector<Perm>& ws) {
    const std::size_t n = setup.n;
    IntMatrix B(ws.size() * n + 1, n);
    QZVector b(ws.size() * n + 1);
    std::size_t r = 0;
    for (const Perm& w : ws) {
        if (w.size() != n)
            throw ValidationError("build_system: permutation rank mismatch");
        const Perm sigma_inv = sigma_of(w, setup.eps_fr).inverse();
        for (int j = 1; j <= static_cast<int>(n); ++j, ++r) {
            B.at(r, static_cast<std::size_t>(sigma_inv.apply(j)) - 1) += 1;
            B.at(r, static_cast<std::size_t>(j) - 1) -= setup.Q;
            b[r] = -setup.alpha;
        }
    }
    for (std::size_t j = 0; j < n; ++j) B.at(r, j) = 1; // det = 1
    return {std::move(B), std::move(b)};
}

std::optional<EdgeWitness> direct_edge(const TypeASetup& setup, const Perm& w,
                                       const Perm& w_prime, ResidueChar ell) {
    if (ell == setup.p)
        throw ValidationError("direct_edge: characteristic p is excluded");
    if (!setup.allows_char(ell))
        throw ValidationError("direct_edge: characteristic not in allowed_chars");
    auto [B, b] = build_system(setup, {w, w_prime});
    auto x = solve_affine_torsion(B, b, ell);
    if (!x) return std::nullopt;
    EdgeWitness wit{w, w_prime, ell, std::move(*x)};
    if (!verify_edge_witness(setup, wit))
        throw InternalError("direct_edge: solver witness failed verification");
    return wit;
}

std::vector<ResidueChar> candidate_chars(const TypeASetup& setup) {
    std::vector<ResidueChar> out;
    if (setup.allows_char(0)) out.push_back(0);
    for (const auto& ell : prime_factors(setup.alpha.order())) {
        long l = static_cast<long>(ell.get_si());
        if (setup.allows_char(l)) out.push_back(l);
    }
    return out;
}

std::optional<std::pair<ResidueChar, QZVector>> prime_power_alpha_hub(
    const TypeASetup& setup) {
    auto factors = prime_factors(setup.alpha.order());
    QZVector zero(setup.n);
    if (factors.empty()) // alpha == 0: the zero point solves every system
        return std::make_pair(ResidueChar{0}, zero);
    if (factors.size() != 1) return std::nullopt;
    long ell = static_cast<long>(factors[0].get_si());
    if (!setup.allows_char(ell)) return std::nullopt;
    return std::make_pair(ell, zero);
}

bool verify_edge_witness(const TypeASetup& setup, const EdgeWitness& witness) {
    if (witness.point.size() != setup.n) return false;
    for (const Perm* w : {&witness.w, &witness.w_prime}) {
        auto [B, b] = build_system(setup, {*w});
        if (!verify_solution(B, b, witness.chr, witness.point)) return false;
    }
    return true;
}

namespace {

// Rows of the v-translate of S_{w'}: a point x lies in v * S_{w'} iff the
// pulled-back coordinates x_{v(j)} satisfy the S_{w'} rows.
void append_translated_rows(IntMatrix& B, QZVector& b, std::size_t& r,
                            const TypeASetup& setup, const Perm& v, const Perm& w) {
    const Perm sigma_inv = sigma_of(w, setup.eps_fr).inverse();
    for (int j = 1; j <= static_cast<int>(setup.n); ++j, ++r) {
        B.at(r, static_cast<std::size_t>(v.apply(sigma_inv.apply(j))) - 1) += 1;
        B.at(r, static_cast<std::size_t>(v.apply(j)) - 1) -= setup.Q;
        b[r] = -setup.alpha;
    }
}

} // namespace

bool verify_translated_edge(const TypeASetup& setup, const Perm& v, const Perm& w,
                            const Perm& w_prime, ResidueChar ell,
                            const QZVector& point) {
    {
        auto [B, b] = build_system(setup, {w});
        if (!verify_solution(B, b, ell, point)) return false;
    }
    IntMatrix B(setup.n + 1, setup.n);
    QZVector b(setup.n + 1);
    std::size_t r = 0;
    append_translated_rows(B, b, r, setup, v, w_prime);
    for (std::size_t j = 0; j < setup.n; ++j) B.at(r, j) = 1;
    return verify_solution(B, b, ell, point);
}

std::optional<std::pair<Perm, EdgeWitness>> exact_images_edge(const TypeASetup& setup,
                                                              const Perm& w,
                                                              const Perm& w_prime,
                                                              ResidueChar ell) {
    if (setup.eps_s != Outer::plus)
        throw UnsupportedMode("exact_images_edge: only eps_s = +1 is supported");
    if (!setup.allows_char(ell))
        throw ValidationError("exact_images_edge: characteristic not allowed");
    for (const Perm& v : enumerate_w0(setup.n, Outer::plus)) {
        IntMatrix B(2 * setup.n + 1, setup.n);
        QZVector b(2 * setup.n + 1);
        std::size_t r = 0;
        {
            const Perm sigma_inv = sigma_of(w, setup.eps_fr).inverse();
            for (int j = 1; j <= static_cast<int>(setup.n); ++j, ++r) {
                B.at(r, static_cast<std::size_t>(sigma_inv.apply(j)) - 1) += 1;
                B.at(r, static_cast<std::size_t>(j) - 1) -= setup.Q;
                b[r] = -setup.alpha;
            }
        }
        append_translated_rows(B, b, r, setup, v, w_prime);
        for (std::size_t j = 0; j < setup.n; ++j) B.at(r, j) = 1;
        auto x = solve_affine_torsion(B, b, ell);
        if (!x) continue;
        if (!verify_translated_edge(setup, v, w, w_prime, ell, *x))
            throw InternalError("exact_images_edge: witness failed verification");
        return std::make_pair(v, EdgeWitness{w, w_prime, ell, std::move(*x)});
    }
    return std::nullopt;
}

} // namespace pconn
