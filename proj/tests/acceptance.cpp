// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
#include "paramconn/chains.hpp"
#include "paramconn/config.hpp"
#include "paramconn/errors.hpp"
#include "paramconn/report.hpp"
#include "paramconn/setup.hpp"
#include "paramconn/torus.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace pconn;

namespace {

int g_failures = 0;

struct Criterion {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

template <typename Fn>
void run(int number, const std::string& title, Fn&& body) {
    Criterion c;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    if (!c.ok) ++g_failures;
    std::printf("%s  criterion %d (%s)  [%.1fs]%s%s\n", c.ok ? "PASS" : "FAIL",
                number, title.c_str(), secs, c.ok ? "" : ": ",
                c.ok ? "" : c.detail.c_str());
    std::fflush(stdout);
}

RawSetup make_raw(std::size_t n, long q, long p, const QZ& alpha,
                  Outer eps_s = Outer::plus, Outer eps_fr = Outer::plus) {
    RawSetup raw;
    raw.n = n;
    raw.q = q;
    raw.p = p;
    raw.alpha_raw = alpha;
    raw.eps_s = eps_s;
    raw.eps_fr = eps_fr;
    return raw;
}

long smallest_prime_factor(long q) {
    for (long d = 2; d * d <= q; ++d)
        if (q % d == 0) return d;
    return q;
}

std::vector<long> primes_up_to(long bound) {
    std::vector<long> out;
    for (long p = 2; p <= bound; ++p) {
        bool prime = true;
        for (long d = 2; d * d <= p; ++d)
            if (p % d == 0) prime = false;
        if (prime) out.push_back(p);
    }
    return out;
}

void crit1_sl6_absent(Criterion& c) {
    TypeASetup s = reduce_setup(preset_setup("sl6-q7"));
    c.require(candidate_chars(s) == std::vector<ResidueChar>{0, 2, 3},
              "candidate characteristics are not {0, 2, 3}");
    const Perm id(6);
    const Perm w = *Perm::parse_cycles("(1 2 3 4 5 6)", 6);
    for (ResidueChar ell : {0L, 2L, 3L})
        c.require(!direct_edge(s, id, w, ell),
                  "unexpected edge id ~ (123456) at char " + std::to_string(ell));
}

void crit2_sl6_chain_golden(Criterion& c) {
    TypeASetup s = reduce_setup(preset_setup("sl6-q7"));
    const Perm w = *Perm::parse_cycles("(1 2 3 4 5 6)", 6);
    const Perm wp = *Perm::parse_cycles("(1 2 3)(4 5 6)", 6);
    c.require(!direct_edge(s, w, wp, 0), "unexpected edge at char 0");
    c.require(!direct_edge(s, w, wp, 3), "unexpected edge at char 3");
    auto e = direct_edge(s, w, wp, 2);
    c.require(e.has_value(), "missing edge at char 2");
    if (e) c.require(verify_edge_witness(s, *e), "solver witness fails the checker");

    // Exponent form of (1, beta, beta^2, 1, beta, beta^2) with beta of order 3.
    EdgeWitness mod2{w, wp, 2,
                     {QZ(), QZ(2, 3), QZ(1, 3), QZ(), QZ(2, 3), QZ(1, 3)}};
    c.require(verify_edge_witness(s, mod2), "textbook mod-2 witness rejected");

    // Exponent form of diag(a^11, a^-1, a^23, a, a, a) with a of order 36,
    // a common char-0 point for the inverse pair under our sigma convention.
    EdgeWitness char0{*Perm::parse_cycles("(1 3 2)(4 6 5)", 6),
                      *Perm::parse_cycles("(1 3 2)", 6), 0,
                      {QZ(11, 36), QZ(35, 36), QZ(23, 36), QZ(1, 36), QZ(1, 36),
                       QZ(1, 36)}};
    c.require(verify_edge_witness(s, char0), "textbook char-0 witness rejected");
}

void crit3_sl2_golden(Criterion& c) {
    for (long q : {3L, 5L, 7L, 9L}) {
        long p = smallest_prime_factor(q);
        const Perm id(2);
        const Perm tr = *Perm::parse_cycles("(1 2)", 2);

        // z = 1: a common char-0 point of mu_{q-1} and mu_{q+1}.
        TypeASetup plus = reduce_setup(make_raw(2, q, p, QZ()));
        auto e0 = direct_edge(plus, id, tr, 0);
        c.require(e0.has_value(), "z=1, q=" + std::to_string(q) + ": no char-0 edge");
        if (e0) c.require(verify_edge_witness(plus, *e0), "z=1 witness fails");

        // z = -1: the systems meet at ell = 2 and nowhere else.
        TypeASetup minus = reduce_setup(make_raw(2, q, p, QZ(1, 2)));
        c.require(minus.alpha == QZ(1, 2),
                  "z=-1, q=" + std::to_string(q) + ": alpha did not stay 1/2");
        c.require(!direct_edge(minus, id, tr, 0),
                  "z=-1, q=" + std::to_string(q) + ": unexpected char-0 edge");
        auto e2 = direct_edge(minus, id, tr, 2);
        c.require(e2.has_value(), "z=-1, q=" + std::to_string(q) + ": no mod-2 edge");
        if (e2) c.require(verify_edge_witness(minus, *e2), "z=-1 witness fails");
        for (long ell : {3L, 5L, 7L}) {
            if (ell == p) continue;
            c.require(!direct_edge(minus, id, tr, ell),
                      "z=-1, q=" + std::to_string(q) + ": unexpected edge at " +
                          std::to_string(ell));
        }
    }
}

void crit4_theorem_sweep(Criterion& c) {
    std::set<std::string> seen;
    std::size_t checked = 0;
    auto check_setup = [&](const RawSetup& raw) {
        TypeASetup s;
        try {
            s = reduce_setup(raw);
        } catch (const ValidationError&) {
            return; // no admissible normalization for this alpha
        }
        std::ostringstream key;
        key << s.n << "|" << s.q_eff << "|" << sign_of(s.eps_s) << "|"
            << sign_of(s.eps_fr) << "|" << s.alpha.str();
        if (!seen.insert(key.str()).second) return;
        TheoremVerdict v = theorem_check(s);
        if (!v.pass) {
            std::ostringstream why;
            why << "FAIL at n=" << s.n << " q=" << s.q_eff
                << " eps_s=" << sign_of(s.eps_s) << " eps_fr=" << sign_of(s.eps_fr)
                << " alpha=" << s.alpha.str() << ": " << v.detail;
            c.require(false, why.str());
        }
        ++checked;
    };

    for (std::size_t n = 1; n <= 5; ++n)
        for (long q : {2L, 3L, 4L, 5L, 7L, 8L, 9L})
            for (Outer eps_fr : {Outer::plus, Outer::minus})
                for (Outer eps_s : {Outer::plus, Outer::minus}) {
                    if (eps_s == Outer::minus && (q % 2 == 0 || n < 2)) continue;
                    for (std::size_t k = 0; k < n; ++k) {
                        if (!c.ok) return;
                        check_setup(make_raw(n, q, smallest_prime_factor(q),
                                             QZ(static_cast<long>(k),
                                                static_cast<long>(n)),
                                             eps_s, eps_fr));
                    }
                }
    c.require(checked >= 100, "sweep covered too few distinct setups");

    // n = 6 spot checks: the full 720-vertex case once, the outer form across
    // sampled central constants.
    TheoremVerdict big = theorem_check(reduce_setup(preset_setup("sl6-q7")));
    c.require(big.pass, "sl6-q7 full theorem check failed: " + big.detail);
    c.require(big.report.vertices.size() == 720, "sl6-q7 vertex count");
    c.require(big.report.partition.size() == 1, "sl6-q7 not a single component");
    for (long q : {5L, 7L, 13L})
        for (Outer eps_fr : {Outer::plus, Outer::minus})
            for (long k : {0L, 1L, 2L}) {
                if (!c.ok) return;
                check_setup(make_raw(6, q, q, QZ(k, 6), Outer::minus, eps_fr));
            }
}

void crit5_chain_validity(Criterion& c) {
    struct Family {
        std::size_t n;
        long q;
        Outer eps_s, eps_fr;
    };
    std::vector<Family> families = {
        {2, 3, Outer::plus, Outer::plus},  {3, 7, Outer::plus, Outer::plus},
        {4, 5, Outer::plus, Outer::plus},  {5, 11, Outer::plus, Outer::plus},
        {6, 7, Outer::plus, Outer::plus},  {6, 7, Outer::minus, Outer::plus},
        {6, 13, Outer::minus, Outer::minus}, {7, 29, Outer::plus, Outer::plus},
        {8, 17, Outer::plus, Outer::plus},
    };
    std::mt19937 rng(2026);
    for (const Family& f : families) {
        TypeASetup s = reduce_setup(make_raw(f.n, f.q, smallest_prime_factor(f.q),
                                             QZ(1, static_cast<long>(f.n)),
                                             f.eps_s, f.eps_fr));
        auto w0 = enumerate_w0(f.n, f.eps_s);
        std::uniform_int_distribution<std::size_t> pick(0, w0.size() - 1);
        for (int iter = 0; iter < 100 && c.ok; ++iter) {
            const Perm& w = w0[pick(rng)];
            Chain chain = chain_to_base(s, w);
            if (!verify_chain(s, chain)) {
                std::ostringstream why;
                why << "chain for " << w.cycles() << " at n=" << f.n
                    << " q=" << f.q << " failed verification";
                c.require(false, why.str());
            }
        }
        if (!c.ok) return;
    }
}

void crit6_congruence_sweep(Criterion& c) {
    // Derived spot values first.
    mpz_class raw1 = 0, pw = 1;
    for (int i = 0; i < 9; ++i) { raw1 += pw; pw *= 4; }
    c.require(raw1 == 87381 && raw1 % 9 == 0, "87381 spot value");
    mpz_class raw2 = 0;
    pw = 1;
    for (int i = 0; i < 4; ++i) { raw2 += (4 - 1 - i) * pw; pw *= 3; }
    c.require(raw2 == 18 && raw2 % 2 == 0, "18 spot value");
    c.require(congruence_sum_1(9, 1, 4) == 0, "congruence_sum_1(9,1,4)");
    c.require(congruence_sum_2(4, 1, 3) == 0, "congruence_sum_2(4,1,3)");

    std::size_t checked = 0;
    for (long n0 = 1; n0 <= 200 && c.ok; ++n0) {
        std::vector<long> ps;
        long rest = n0;
        for (long d = 2; d * d <= rest; ++d)
            while (rest % d == 0) {
                if (ps.empty() || ps.back() != d) ps.push_back(d);
                rest /= d;
            }
        if (rest > 1) ps.push_back(rest);
        for (long q = 2; q <= 200; ++q) {
            bool hyp = true;
            for (long p : ps)
                if ((q - 1) % p != 0) hyp = false;
            if (!hyp) continue;
            for (long e = 1; e <= 3; ++e) {
                if (congruence_sum_1(n0, e, q) != 0)
                    c.require(false, "sum_1 nonzero at n0=" + std::to_string(n0) +
                                         " e=" + std::to_string(e) +
                                         " q=" + std::to_string(q));
                if (congruence_sum_2(n0, e, q) != 0)
                    c.require(false, "sum_2 nonzero at n0=" + std::to_string(n0) +
                                         " e=" + std::to_string(e) +
                                         " q=" + std::to_string(q));
                ++checked;
            }
        }
    }
    c.require(checked > 1000, "congruence sweep covered too few cases");
}

void crit7_torus(Criterion& c) {
    // Golden instance with the point-count oracle.
    TorusAction golden{1, IntMatrix::identity(1), IntMatrix::identity(1), 5, 8};
    FgAbGroup g = cocycle_group(golden);
    c.require(g.free_rank == 1 && g.torsion == std::vector<mpz_class>{4},
              "golden (q=5, b=8) cocycle group is not Z + Z/4");

    const std::size_t r = 1;
    IntMatrix M(2 * r, 2 * r);
    // I - s^q = 0, fr - sum_{i<q} s^i = 1 - 5, sum_{i<b} s^i = 8 for s = fr = 1.
    M.at(0, 0) = 0;
    M.at(0, 1) = 1 - 5;
    M.at(1, 1) = 8;
    for (long N : {1L, 2L, 4L, 5L, 8L, 20L, 40L})
        c.require(oracle::point_count(M, N) == oracle::predicted_point_count(g, N),
                  "point count mismatch at N=" + std::to_string(N));

    // Sweep: torsion of every valid rank <= 2 action is a D'-number, i.e.
    // supported in b, q and the q^e -+ 1 factors.
    auto from_rows = [](std::vector<std::vector<long>> rows) {
        IntMatrix m(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
        return m;
    };
    std::vector<IntMatrix> pool1 = {IntMatrix::identity(1), from_rows({{-1}})};
    std::vector<IntMatrix> pool2;
    for (long a = -1; a <= 1; ++a)
        for (long b = -1; b <= 1; ++b)
            for (long x = -1; x <= 1; ++x)
                for (long d = -1; d <= 1; ++d) {
                    IntMatrix m = from_rows({{a, b}, {x, d}});
                    mpz_class det = m.determinant();
                    if (det == 1 || det == -1) pool2.push_back(m);
                }
    std::size_t checked = 0;
    auto sweep = [&](const std::vector<IntMatrix>& pool, std::size_t rank) {
        for (const IntMatrix& s : pool)
            for (const IntMatrix& fr : pool)
                for (long q : {2L, 3L, 5L, 9L})
                    for (long b : {1L, 2L, 3L, 4L, 6L, 8L}) {
                        if (!c.ok) return;
                        TorusAction act{rank, s, fr, q, b};
                        try {
                            act.validate();
                        } catch (const ValidationError&) {
                            continue;
                        }
                        mpz_class ord = cocycle_group(act).torsion_order();
                        mpz_class supp = mpz_class(b) * q, qe = 1;
                        for (long e = 1; e <= 2 * b; ++e) {
                            qe *= q;
                            supp *= (qe - 1) * (qe + 1);
                        }
                        mpz_class g_ = gcd(ord, supp);
                        while (g_ > 1) {
                            while (ord % g_ == 0) ord /= g_;
                            g_ = gcd(ord, supp);
                        }
                        if (ord != 1)
                            c.require(false, "torsion not a D'-number at q=" +
                                                 std::to_string(q) + " b=" +
                                                 std::to_string(b));
                        ++checked;
                    }
    };
    sweep(pool1, 1);
    sweep(pool2, 2);
    c.require(checked > 100, "torus sweep covered too few actions");
}

void crit8_solver_vs_oracle(Criterion& c) {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<long> dim_rows(1, 3), dim_cols(1, 2);
    std::uniform_int_distribution<long> entry(-4, 4);
    std::vector<long> dens = {1, 2, 3, 4, 6};
    std::uniform_int_distribution<std::size_t> den_pick(0, dens.size() - 1);
    std::uniform_int_distribution<long> num_pick(0, 11);

    for (long ell : {0L, 2L, 3L}) {
        std::size_t checked = 0;
        while (checked < 1000 && c.ok) {
            const std::size_t rows = dim_rows(rng), cols = dim_cols(rng);
            IntMatrix B(rows, cols);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j) B.at(i, j) = entry(rng);
            QZVector b(rows);
            for (std::size_t i = 0; i < rows; ++i)
                b[i] = QZ(num_pick(rng), dens[den_pick(rng)]);

            // The canonical witness has denominators dividing the prime-to-ell
            // part of lcm(invariant factors) * lcm(denominators of b), so a
            // grid of that pitch decides solvability.
            std::vector<mpz_class> f = oracle::invariant_factors(B);
            mpz_class dens = 1;
            for (const QZ& v : b) dens = lcm(dens, v.den());
            mpz_class L = (f.empty() ? 1 : f.back()) * dens;
            if (ell > 0)
                while (L % ell == 0) L /= ell;
            if (L > 60) continue;

            auto got = solve_affine_torsion(B, b, ell);
            auto want = oracle::search_solution(B, b, ell, L.get_si());
            if (got.has_value() != want.has_value())
                c.require(false, "solver/oracle disagree at ell=" +
                                     std::to_string(ell) + " after " +
                                     std::to_string(checked) + " cases");
            if (got && !verify_solution(B, b, ell, *got))
                c.require(false, "solver witness fails re-verification at ell=" +
                                     std::to_string(ell));
            ++checked;
        }
    }
}

void crit9_invariance(Criterion& c) {
    // (a) alpha-translation invariance of the edge truth table.
    struct Case { std::size_t n; long q; };
    for (Case t : {Case{2, 8}, Case{3, 5}, Case{3, 7}, Case{4, 7}}) {
        TypeASetup s = reduce_setup(make_raw(t.n, t.q, smallest_prime_factor(t.q),
                                             QZ(1, static_cast<long>(t.n))));
        auto w0 = enumerate_w0(t.n, Outer::plus);
        std::vector<ResidueChar> chars = {0};
        for (long ell : {2L, 3L, 5L, 7L})
            if (ell != s.p) chars.push_back(ell);
        for (std::size_t k = 1; k < t.n && c.ok; ++k) {
            TypeASetup shifted = s;
            shifted.alpha = s.alpha + QZ(static_cast<long>(k),
                                         static_cast<long>(t.n)) * (s.Q - 1);
            if (shifted.alpha == s.alpha) continue;
            for (std::size_t i = 0; i < w0.size() && c.ok; ++i)
                for (std::size_t j = i; j < w0.size() && c.ok; ++j)
                    for (ResidueChar ell : chars) {
                        bool lhs = direct_edge(s, w0[i], w0[j], ell).has_value();
                        bool rhs =
                            direct_edge(shifted, w0[i], w0[j], ell).has_value();
                        if (lhs != rhs)
                            c.require(false,
                                      "translation changed the edge table at n=" +
                                          std::to_string(t.n) + " q=" +
                                          std::to_string(t.q) + " ell=" +
                                          std::to_string(ell));
                    }
        }
    }

    // (b) candidate completeness: outside the candidate set every prime
    // behaves like characteristic zero.
    std::mt19937 rng(7);
    std::vector<long> primes = primes_up_to(50);
    for (std::size_t n = 2; n <= 5 && c.ok; ++n) {
        TypeASetup s = reduce_setup(
            make_raw(n, 7, 7, QZ(1, static_cast<long>(n))));
        std::vector<ResidueChar> cands = candidate_chars(s);
        auto in_cands = [&](long ell) {
            for (ResidueChar cc : cands)
                if (cc == ell) return true;
            return false;
        };
        auto w0 = enumerate_w0(n, Outer::plus);
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        if (n <= 4) {
            for (std::size_t i = 0; i < w0.size(); ++i)
                for (std::size_t j = i; j < w0.size(); ++j) pairs.emplace_back(i, j);
        } else {
            std::uniform_int_distribution<std::size_t> pick(0, w0.size() - 1);
            for (int iter = 0; iter < 200; ++iter)
                pairs.emplace_back(pick(rng), pick(rng));
        }
        for (auto [i, j] : pairs) {
            if (!c.ok) break;
            bool at_zero = direct_edge(s, w0[i], w0[j], 0).has_value();
            for (long ell : primes) {
                if (ell == s.p || in_cands(ell)) continue;
                if (direct_edge(s, w0[i], w0[j], ell).has_value() != at_zero)
                    c.require(false, "candidate set incomplete at n=" +
                                         std::to_string(n) + " ell=" +
                                         std::to_string(ell));
            }
        }
    }

    // (c) exact mode is never finer than direct mode.
    for (Case t : {Case{2, 5}, Case{3, 7}, Case{4, 7}}) {
        RawSetup raw = make_raw(t.n, t.q, smallest_prime_factor(t.q),
                                QZ(1, static_cast<long>(t.n)));
        raw.allowed = AllowedChars::explicit_list({0});
        TypeASetup s = reduce_setup(raw);
        ComponentReport direct = components(s, Mode::direct);
        ComponentReport exact = components(s, Mode::exact);
        c.require(exact.partition.size() <= direct.partition.size(),
                  "exact mode finer than direct at n=" + std::to_string(t.n));
        auto comp_of = [](const ComponentReport& r, const Perm& w) {
            for (std::size_t i = 0; i < r.partition.size(); ++i)
                for (const Perm& v : r.partition[i])
                    if (v == w) return i;
            return r.partition.size();
        };
        for (const auto& comp : direct.partition) {
            std::size_t target = comp_of(exact, comp.front());
            for (const Perm& w : comp)
                if (comp_of(exact, w) != target)
                    c.require(false, "direct component split in exact mode at n=" +
                                         std::to_string(t.n));
        }
    }
}

} // namespace

int main() {
    run(1, "sl6 golden: no edge from the identity", crit1_sl6_absent);
    run(2, "sl6 chain golden: mod-2 only, textbook witnesses",
        crit2_sl6_chain_golden);
    run(3, "sl2 golden across q", crit3_sl2_golden);
    run(4, "theorem sweep n <= 5 with n = 6 spot checks", crit4_theorem_sweep);
    run(5, "chain validity on random vertices, n <= 8", crit5_chain_validity);
    run(6, "congruence sweep", crit6_congruence_sweep);
    run(7, "torus cocycle property and golden instance", crit7_torus);
    run(8, "solver vs exhaustive oracle", crit8_solver_vs_oracle);
    run(9, "invariance suite", crit9_invariance);
    return g_failures == 0 ? 0 : 1;
}
