#include "paramconn/selftest.hpp"

#include "paramconn/chains.hpp"
#include "paramconn/config.hpp"
#include "paramconn/report.hpp"
#include "paramconn/torus.hpp"

namespace pconn {

namespace {

bool congruence_hypothesis(long n0, const mpz_class& q) {
    long v = n0;
    for (long d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            if ((q - 1) % d != 0) return false;
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1 && (q - 1) % v != 0) return false;
    return true;
}

} // namespace

std::optional<std::string> selftest() {
    try {
        for (long n0 = 1; n0 <= 200; ++n0)
            for (long q = 1; q <= 200; ++q) {
                if (!congruence_hypothesis(n0, q)) continue;
                for (long e = 1; e <= 3; ++e) {
                    if (congruence_sum_1(n0, e, q) != 0)
                        return "congruence_sum_1 nonzero at n0=" +
                               std::to_string(n0) + " e=" + std::to_string(e) +
                               " q=" + std::to_string(q);
                    if (congruence_sum_2(n0, e, q) != 0)
                        return "congruence_sum_2 nonzero at n0=" +
                               std::to_string(n0) + " e=" + std::to_string(e) +
                               " q=" + std::to_string(q);
                }
            }

        if (prime_to_part(QZ(1, 6), 2) != QZ(2, 3))
            return "prime_to_part(1/6, 2) != 2/3";
        if (prime_to_part(QZ(1, 4), 2) != QZ())
            return "prime_to_part(1/4, 2) != 0";

        {
            TypeASetup s = reduce_setup(preset_setup("sl6-q7"));
            if (s.alpha != QZ(1, 6)) return "sl6-q7: normalized alpha != 1/6";
            if (candidate_chars(s) != std::vector<ResidueChar>{0, 2, 3})
                return "sl6-q7: candidate chars != {0, 2, 3}";
            const Perm id(6);
            const Perm w6 = *Perm::parse_cycles("(1 2 3 4 5 6)", 6);
            const Perm wp = *Perm::parse_cycles("(1 2 3)(4 5 6)", 6);
            for (ResidueChar ell : {0L, 2L, 3L})
                if (direct_edge(s, id, w6, ell))
                    return "sl6-q7: unexpected edge id ~ (123456) at char " +
                           std::to_string(ell);
            for (ResidueChar ell : {0L, 3L})
                if (direct_edge(s, w6, wp, ell))
                    return "sl6-q7: unexpected edge at char " + std::to_string(ell);
            if (!direct_edge(s, w6, wp, 2))
                return "sl6-q7: missing edge (123456) ~ (123)(456) at char 2";
            EdgeWitness golden{w6, wp, 2,
                              {QZ(), QZ(2, 3), QZ(1, 3), QZ(), QZ(2, 3), QZ(1, 3)}};
            if (!verify_edge_witness(s, golden))
                return "sl6-q7: textbook witness fails the checker";
            Chain c = chain_to_base(s, w6);
            if (c.steps.size() != 3) return "sl6-q7: chain length != 3";
            if (c.steps[0].witness.chr != 2 || c.steps[1].witness.chr != 0 ||
                c.steps[2].witness.chr != 0)
                return "sl6-q7: chain characteristics != (2, 0, 0)";
            if (c.steps[0].to != wp) return "sl6-q7: first chain step != (123)(456)";
        }

        {
            RawSetup raw = preset_setup("sl2");
            if (components(reduce_setup(raw), Mode::direct).partition.size() != 1)
                return "sl2 alpha=0: not connected";
            raw.alpha_raw = QZ(1, 2);
            raw.allowed = AllowedChars::explicit_list({0});
            if (components(reduce_setup(raw), Mode::direct).partition.size() != 2)
                return "sl2 alpha=1/2 over char 0: expected two components";
            raw.allowed = AllowedChars::all();
            TypeASetup s = reduce_setup(raw);
            auto repo = components(s, Mode::direct);
            if (repo.partition.size() != 1) return "sl2 alpha=1/2: not connected";
            if (repo.edges.size() != 1 || repo.edges[0].chr != 2)
                return "sl2 alpha=1/2: expected a single char-2 edge";
            EdgeWitness golden{Perm(2), *Perm::parse_cycles("(1 2)", 2), 2,
                              {QZ(), QZ()}};
            if (!verify_edge_witness(s, golden))
                return "sl2 alpha=1/2: zero witness fails the checker";
        }

        {
            TorusAction act{1, IntMatrix::identity(1), IntMatrix::identity(1), 5, 8};
            FgAbGroup g = cocycle_group(act);
            if (g.free_rank != 1 || g.torsion != std::vector<mpz_class>{4})
                return "cocycle group (q=5, b=8) != Z + Z/4";
            if (!is_connected_over(g, {}))
                return "cocycle group (q=5, b=8): expected connected";
            if (is_connected_over(g, {2}))
                return "cocycle group (q=5, b=8): connected with 2 inverted";
        }
    } catch (const std::exception& e) {
        return std::string("selftest exception: ") + e.what();
    }
    return std::nullopt;
}

} // namespace pconn
