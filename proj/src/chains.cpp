#include "paramconn/chains.hpp"

#include "paramconn/errors.hpp"

#include <algorithm>

namespace pconn {

namespace {

std::vector<long> prime_factors_long(std::size_t v) {
    std::vector<long> out;
    for (std::size_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(static_cast<long>(d));
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(static_cast<long>(v));
    return out;
}

void check_congruence_pre(long n0, long e, const mpz_class& q) {
    if (n0 < 1 || e < 1 || q < 1)
        throw ValidationError("congruence_sum: arguments must be positive");
    for (long ell : prime_factors_long(static_cast<std::size_t>(n0)))
        if ((q - 1) % ell != 0)
            throw ValidationError("congruence_sum: some prime of n0 does not "
                                  "divide q - 1");
}

} // namespace

mpz_class congruence_sum_1(long n0, long e, const mpz_class& q) {
    check_congruence_pre(n0, e, q);
    mpz_class sum = 0, pw = 1;
    for (long i = 0; i < n0 * e; ++i) {
        sum += pw;
        pw = pw * q % n0;
    }
    sum %= n0;
    if (sum != 0)
        throw InternalError("congruence_sum_1: nonzero under the hypothesis");
    return sum;
}

mpz_class congruence_sum_2(long n0, long e, const mpz_class& q) {
    check_congruence_pre(n0, e, q);
    const long mod = (n0 % 2 == 0) ? n0 / 2 : n0;
    mpz_class sum = 0, pw = 1;
    for (long i = 0; i < n0 * e; ++i) {
        sum += mpz_class(n0 * e - 1 - i) * pw;
        if (mod > 1) pw = pw * q % mod;
    }
    if (mod > 1) sum %= mod; else sum = 0;
    if (sum != 0)
        throw InternalError("congruence_sum_2: nonzero under the hypothesis");
    return sum;
}

std::optional<EdgeWitness> helper_edge(const TypeASetup& setup, const Perm& w,
                                       const Perm& w_prime) {
    const std::size_t n = setup.n;
    const Perm sw = sigma_of(w, setup.eps_fr);
    const Perm swp = sigma_of(w_prime, setup.eps_fr);
    if (sw * swp != swp * sw)
        throw ValidationError("helper_edge: translation parts do not commute");
    const Perm tau = sw.inverse() * swp;

    // Character group of the fixed subgroup of tau inside the det-1 torus:
    // cokernel of the columns e_j - e_{tau(j)} together with the all-ones
    // column. Torsion-free means the fixed subgroup is a torus.
    IntMatrix M(n, n + 1);
    for (int j = 1; j <= static_cast<int>(n); ++j) {
        M.at(static_cast<std::size_t>(j) - 1, static_cast<std::size_t>(j) - 1) += 1;
        M.at(static_cast<std::size_t>(tau.apply(j)) - 1, static_cast<std::size_t>(j) - 1) -= 1;
    }
    for (std::size_t i = 0; i < n; ++i) M.at(i, n) = 1;
    if (!cokernel(M).torsion.empty()) return std::nullopt;

    auto [B, b] = build_system(setup, {w, w_prime});
    IntMatrix Bx(B.rows() + n, n);
    QZVector bx(B.rows() + n);
    for (std::size_t i = 0; i < B.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) Bx.at(i, j) = B.at(i, j);
        bx[i] = b[i];
    }
    for (int j = 1; j <= static_cast<int>(n); ++j) {
        std::size_t r = B.rows() + static_cast<std::size_t>(j) - 1;
        Bx.at(r, static_cast<std::size_t>(j) - 1) += 1;
        Bx.at(r, static_cast<std::size_t>(tau.apply(j)) - 1) -= 1;
    }
    auto x = solve_affine_torsion(Bx, bx, 0);
    if (!x) return std::nullopt;
    EdgeWitness wit{w, w_prime, 0, std::move(*x)};
    if (!verify_edge_witness(setup, wit))
        throw InternalError("helper_edge: witness failed verification");
    return wit;
}

std::pair<Perm, EdgeWitness> split_cycle(const TypeASetup& setup, const Perm& w) {
    const std::size_t n = setup.n;
    const Perm sigma = sigma_of(w, setup.eps_fr);
    auto dec = s_cycle_decomposition(sigma, setup.eps_s);
    if (dec.size() != 1 || dec[0].length() != n)
        throw ValidationError("split_cycle: sigma_w is not a single s-cycle of "
                              "full length");
    const bool paired = dec[0].paired();
    const std::size_t np = dec[0].first.size(); // n for plain, n/2 for paired

    auto in_d = [&](long ell) {
        return ell == setup.p || setup.in_inverted(ell);
    };
    long ell = 0;
    for (long cand : prime_factors_long(np))
        if (!in_d(cand)) { ell = cand; break; }
    if (ell == 0)
        throw ValidationError("split_cycle: no admissible prime divides the "
                              "cycle length");
    if (setup.eps_s == Outer::minus && !paired) {
        // The construction for a flip-stable full cycle only lands in W0 at
        // ell = 2.
        if (np % 2 != 0 || in_d(2))
            throw UnsupportedMode("split_cycle: flip-stable full cycle needs "
                                  "ell = 2, which is not admissible here");
        ell = 2;
    }

    std::size_t d = np;
    while (d % static_cast<std::size_t>(ell) == 0) d /= static_cast<std::size_t>(ell);

    // sigma' advances along each orbit of sigma, jumping back d steps at
    // multiples of d; this cuts the length-np cycle into ell^c cycles of
    // length d.
    std::vector<int> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<int>(i) + 1;
    auto install = [&](int start) {
        std::vector<int> orbit;
        int cur = start;
        do {
            orbit.push_back(cur);
            cur = sigma.apply(cur);
        } while (cur != start);
        const std::size_t L = orbit.size();
        for (std::size_t i = 0; i < L; ++i) {
            std::size_t next = (i + 1) % d == 0 ? (i + 1 - d) % L : (i + 1) % L;
            images[static_cast<std::size_t>(orbit[i]) - 1] = orbit[next];
        }
    };
    install(1);
    if (paired) install(static_cast<int>(n));
    Perm sigma_p(std::move(images));
    Perm w_prime = induced_involution(n, setup.eps_fr) * sigma_p;
    if (!commutes_with_involution(sigma_p, setup.eps_s))
        throw InternalError("split_cycle: produced sigma' outside W0");

    // Closed-form witness: along the orbit of 1 (and its partner orbit),
    // x at sigma^{-j}(1) is -alpha_bar * (1 + Q + ... + Q^{j-1}).
    const QZ abar = prime_to_part(setup.alpha, ell);
    QZVector x(n);
    auto fill = [&](int start) {
        mpz_class geom = 0, pw = 1;
        int cur = start;
        const Perm sigma_inv = sigma.inverse();
        do {
            x[static_cast<std::size_t>(cur) - 1] = -(abar * geom);
            geom += pw;
            pw *= setup.Q;
            cur = sigma_inv.apply(cur);
        } while (cur != start);
    };
    fill(1);
    if (paired) fill(static_cast<int>(n));

    EdgeWitness wit{w, w_prime, ell, std::move(x)};
    if (!verify_edge_witness(setup, wit)) {
        auto [B, b] = build_system(setup, {w, w_prime});
        auto sol = solve_affine_torsion(B, b, ell);
        if (!sol)
            throw InternalError("split_cycle: no witness at the chosen prime");
        wit.point = std::move(*sol);
        if (!verify_edge_witness(setup, wit))
            throw InternalError("split_cycle: witness failed verification");
    }
    return {std::move(w_prime), std::move(wit)};
}

std::string to_string(ChainRule rule) {
    switch (rule) {
        case ChainRule::helper: return "helper";
        case ChainRule::split_cycle: return "split-cycle";
        case ChainRule::peel: return "peel";
        case ChainRule::hub: return "hub";
    }
    throw ValidationError("to_string: unknown chain rule");
}

bool verify_chain(const TypeASetup& setup, const Chain& chain) {
    const Perm base = setup.base_vertex();
    if (chain.base != base) return false;
    if (chain.steps.empty()) return chain.w == base;
    if (chain.steps.front().from != chain.w) return false;
    if (chain.steps.back().to != base) return false;
    for (std::size_t i = 0; i + 1 < chain.steps.size(); ++i)
        if (chain.steps[i].to != chain.steps[i + 1].from) return false;
    for (const ChainStep& st : chain.steps) {
        if (st.witness.w != st.from || st.witness.w_prime != st.to) return false;
        if (!verify_edge_witness(setup, st.witness)) return false;
    }
    return true;
}

Chain chain_to_base(const TypeASetup& setup, const Perm& w) {
    if (w.size() != setup.n)
        throw ValidationError("chain_to_base: permutation rank mismatch");
    if (!commutes_with_involution(sigma_of(w, setup.eps_fr), setup.eps_s))
        throw ValidationError("chain_to_base: w is not in W0");

    // Chains may use any characteristic away from p and the inverted primes;
    // steps outside setup.allowed are reported, not rejected.
    TypeASetup relaxed = setup;
    relaxed.allowed = AllowedChars::all();

    const Perm base = setup.base_vertex();
    Chain chain{w, base, {}, {}};
    if (w == base) return chain;

    if (auto hub = prime_power_alpha_hub(relaxed)) {
        EdgeWitness wit{w, base, hub->first, hub->second};
        if (!verify_edge_witness(relaxed, wit))
            throw InternalError("chain_to_base: hub witness failed verification");
        chain.steps.push_back(ChainStep{w, base, ChainRule::hub, std::move(wit)});
    } else {
        Perm cur = w;
        std::size_t guard = 0;
        while (cur != base) {
            if (++guard > 4 * setup.n + 8)
                throw InternalError("chain_to_base: no progress");
            const Perm sigma = sigma_of(cur, setup.eps_fr);
            auto dec = s_cycle_decomposition(sigma, setup.eps_s);
            if (dec.size() == 1 && dec[0].length() == setup.n) {
                auto [next, wit] = split_cycle(relaxed, cur);
                chain.steps.push_back(
                    ChainStep{cur, next, ChainRule::split_cycle, std::move(wit)});
                cur = next;
            } else if (dec.size() >= 2) {
                Perm next = induced_involution(setup.n, setup.eps_fr) *
                            dec[0].as_perm(setup.n);
                auto wit = helper_edge(relaxed, cur, next);
                if (!wit)
                    throw InternalError("chain_to_base: peel step has no witness");
                chain.steps.push_back(
                    ChainStep{cur, next, ChainRule::peel, std::move(*wit)});
                cur = next;
            } else {
                auto wit = helper_edge(relaxed, cur, base);
                if (!wit)
                    throw InternalError("chain_to_base: final step has no witness");
                chain.steps.push_back(
                    ChainStep{cur, base, ChainRule::helper, std::move(*wit)});
                cur = base;
            }
        }
    }

    for (const ChainStep& st : chain.steps)
        if (!setup.allows_char(st.witness.chr) &&
            std::find(chain.outside_chars.begin(), chain.outside_chars.end(),
                      st.witness.chr) == chain.outside_chars.end())
            chain.outside_chars.push_back(st.witness.chr);
    std::sort(chain.outside_chars.begin(), chain.outside_chars.end());
    if (!verify_chain(setup, chain))
        throw InternalError("chain_to_base: assembled chain failed verification");
    return chain;
}

} // namespace pconn
