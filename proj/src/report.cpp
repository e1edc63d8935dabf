#include "paramconn/report.hpp"

#include "paramconn/errors.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace pconn {

namespace {

class UnionFind {
  public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }
    std::size_t find(std::size_t a) {
        while (parent_[a] != a) {
            parent_[a] = parent_[parent_[a]];
            a = parent_[a];
        }
        return a;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent_[b] = a; // keep the least index as root, for stable reports
        return true;
    }

  private:
    std::vector<std::size_t> parent_;
};

constexpr std::size_t kPairMatrixRankCap = 6;

} // namespace

std::string to_string(Mode mode) {
    return mode == Mode::direct ? "direct" : "exact";
}

Mode parse_mode(const std::string& text) {
    if (text == "direct") return Mode::direct;
    if (text == "exact") return Mode::exact;
    throw ValidationError("mode must be \"direct\" or \"exact\"");
}

ComponentReport components(const TypeASetup& setup, Mode mode, int jobs) {
    ComponentReport rep;
    rep.setup = setup;
    rep.mode = mode;
    rep.vertices = enumerate_w0(setup.n, setup.eps_s, kPairMatrixRankCap);
    const std::size_t nv = rep.vertices.size();
    const std::vector<ResidueChar> chars = candidate_chars(setup);

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(nv * (nv - 1) / 2);
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = i + 1; j < nv; ++j) pairs.emplace_back(i, j);

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t workers = jobs > 0 ? static_cast<std::size_t>(jobs)
                                         : static_cast<std::size_t>(hw);

    UnionFind uf(nv);
    // Counted as the sequential skip-scan would: a pair contributes only when
    // it is still unconnected at its turn in sorted order, so the stat is
    // independent of the batching below.
    std::size_t solver_calls = 0;
    auto try_pair = [&](std::size_t i,
                        std::size_t j) -> std::pair<std::optional<EdgeWitness>,
                                                    std::size_t> {
        std::size_t attempts = 0;
        for (ResidueChar ell : chars) {
            ++attempts;
            if (auto wit = direct_edge(setup, rep.vertices[i], rep.vertices[j], ell))
                return {std::move(wit), attempts};
        }
        return {std::nullopt, attempts};
    };

    // Batches keep the result independent of the schedule: within a batch all
    // still-unconnected pairs are solved, then merged in sorted pair order,
    // dropping results that an earlier merge already connected. The recorded
    // edges coincide with the sequential skip-if-connected scan.
    const std::size_t batch_cap = workers * 8;
    std::size_t idx = 0;
    while (idx < pairs.size()) {
        std::vector<std::size_t> batch;
        while (idx < pairs.size() && batch.size() < batch_cap) {
            const auto& [i, j] = pairs[idx];
            if (uf.find(i) != uf.find(j)) batch.push_back(idx);
            ++idx;
        }
        if (batch.empty()) continue;
        std::vector<std::pair<std::optional<EdgeWitness>, std::size_t>> found(
            batch.size());
        if (workers <= 1 || batch.size() == 1) {
            for (std::size_t k = 0; k < batch.size(); ++k)
                found[k] = try_pair(pairs[batch[k]].first, pairs[batch[k]].second);
        } else {
            std::vector<std::thread> pool;
            for (std::size_t t = 0; t < workers; ++t)
                pool.emplace_back([&, t] {
                    for (std::size_t k = t; k < batch.size(); k += workers)
                        found[k] =
                            try_pair(pairs[batch[k]].first, pairs[batch[k]].second);
                });
            for (auto& th : pool) th.join();
        }
        for (std::size_t k = 0; k < batch.size(); ++k) {
            const auto& [i, j] = pairs[batch[k]];
            if (uf.find(i) == uf.find(j)) continue; // sequential scan skips it
            solver_calls += found[k].second;
            if (!found[k].first) continue;
            if (uf.unite(i, j)) rep.edges.push_back(std::move(*found[k].first));
        }
    }

    if (mode == Mode::exact && setup.eps_s == Outer::plus) {
        for (const auto& [i, j] : pairs) {
            if (uf.find(i) == uf.find(j)) continue;
            for (ResidueChar ell : chars) {
                ++solver_calls;
                if (exact_images_edge(setup, rep.vertices[i], rep.vertices[j], ell)) {
                    uf.unite(i, j);
                    ++rep.stats.translated_merges;
                    break;
                }
            }
        }
    }

    std::vector<std::size_t> root_of(nv);
    std::vector<std::size_t> roots;
    for (std::size_t i = 0; i < nv; ++i) {
        root_of[i] = uf.find(i);
        if (root_of[i] == i) roots.push_back(i);
    }
    for (std::size_t r : roots) {
        std::vector<Perm> comp;
        for (std::size_t i = 0; i < nv; ++i)
            if (root_of[i] == r) comp.push_back(rep.vertices[i]);
        rep.partition.push_back(std::move(comp));
    }

    rep.verdict = rep.partition.size() == 1 ? "connected" : "direct-disconnected";
    rep.stats.vertices = nv;
    rep.stats.pairs = pairs.size();
    rep.stats.solver_calls = solver_calls;
    rep.stats.components = rep.partition.size();
    return rep;
}

TheoremVerdict theorem_check(const TypeASetup& setup) {
    TypeASetup full = setup;
    full.allowed = AllowedChars::all();

    TheoremVerdict v;
    v.report = components(full, Mode::direct);

    if (v.report.partition.size() != 1) {
        v.pass = false;
        v.offending_pair = {v.report.partition[0].front(),
                            v.report.partition[1].front()};
        v.detail = "disconnected: " + v.offending_pair->first.cycles() + " vs " +
                   v.offending_pair->second.cycles();
        return v;
    }
    for (const EdgeWitness& e : v.report.edges) {
        if (!verify_edge_witness(full, e)) {
            v.pass = false;
            v.offending_pair = {e.w, e.w_prime};
            v.detail = "edge witness failed recheck: " + e.w.cycles() + " ~ " +
                       e.w_prime.cycles();
            return v;
        }
    }
    for (const auto& comp : v.report.partition) {
        std::vector<const Perm*> picks = {&comp.front()};
        if (comp.size() > 1) picks.push_back(&comp.back());
        for (const Perm* w : picks) {
            Chain c = chain_to_base(full, *w);
            if (!verify_chain(full, c)) {
                v.pass = false;
                v.offending_pair = {*w, full.base_vertex()};
                v.detail = "chain certificate failed for " + w->cycles();
                return v;
            }
            v.chains.push_back(std::move(c));
        }
    }
    v.pass = true;
    v.detail = "connected";
    return v;
}

nlohmann::ordered_json setup_to_json(const TypeASetup& setup) {
    nlohmann::ordered_json j;
    j["n"] = setup.n;
    j["q_eff"] = setup.q_eff.get_str();
    j["p"] = setup.p;
    j["eps_s"] = sign_of(setup.eps_s);
    j["eps_fr"] = sign_of(setup.eps_fr);
    j["alpha"] = setup.alpha.str();
    j["inverted_primes"] = setup.inverted_primes;
    if (setup.allowed.all_primes && setup.allowed.include_zero) {
        j["allowed_chars"] = "all";
    } else {
        std::vector<long> listed;
        if (setup.allowed.include_zero) listed.push_back(0);
        for (long c : setup.allowed.listed) listed.push_back(c);
        j["allowed_chars"] = listed;
    }
    return j;
}

TypeASetup setup_from_json(const nlohmann::ordered_json& j) {
    TypeASetup s;
    try {
        s.n = j.at("n").get<std::size_t>();
        s.q_eff = mpz_class(j.at("q_eff").get<std::string>());
        s.p = j.at("p").get<long>();
        s.eps_s = j.at("eps_s").get<int>() < 0 ? Outer::minus : Outer::plus;
        s.eps_fr = j.at("eps_fr").get<int>() < 0 ? Outer::minus : Outer::plus;
        s.alpha = QZ::parse(j.at("alpha").get<std::string>());
        s.inverted_primes = j.at("inverted_primes").get<std::vector<long>>();
        const auto& ac = j.at("allowed_chars");
        if (ac.is_string() && ac.get<std::string>() == "all")
            s.allowed = AllowedChars::all();
        else
            s.allowed = AllowedChars::explicit_list(ac.get<std::vector<long>>());
    } catch (const nlohmann::ordered_json::exception& e) {
        throw ValidationError(std::string("setup json: ") + e.what());
    }
    if (s.n < 1) throw ValidationError("setup json: n must be >= 1");
    require_residue_char(s.p);
    s.Q = sign_of(s.eps_fr) * s.q_eff;
    return s;
}

nlohmann::ordered_json report_to_json(const ComponentReport& report) {
    nlohmann::ordered_json j;
    j["setup"] = setup_to_json(report.setup);
    j["mode"] = to_string(report.mode);
    auto comps = nlohmann::ordered_json::array();
    for (const auto& comp : report.partition) {
        auto arr = nlohmann::ordered_json::array();
        for (const Perm& w : comp) arr.push_back(w.cycles());
        comps.push_back(std::move(arr));
    }
    j["components"] = std::move(comps);
    auto edges = nlohmann::ordered_json::array();
    for (const EdgeWitness& e : report.edges) {
        nlohmann::ordered_json je;
        je["w"] = e.w.cycles();
        je["w_prime"] = e.w_prime.cycles();
        je["char"] = e.chr;
        auto pt = nlohmann::ordered_json::array();
        for (const QZ& c : e.point) pt.push_back(c.str());
        je["point"] = std::move(pt);
        edges.push_back(std::move(je));
    }
    j["edges"] = std::move(edges);
    j["verdict"] = report.verdict;
    nlohmann::ordered_json st;
    st["vertices"] = report.stats.vertices;
    st["pairs"] = report.stats.pairs;
    st["solver_calls"] = report.stats.solver_calls;
    st["translated_merges"] = report.stats.translated_merges;
    st["components"] = report.stats.components;
    j["stats"] = std::move(st);
    return j;
}

nlohmann::ordered_json chain_to_json(const Chain& chain) {
    nlohmann::ordered_json j;
    j["w"] = chain.w.cycles();
    j["base"] = chain.base.cycles();
    auto steps = nlohmann::ordered_json::array();
    for (const ChainStep& st : chain.steps) {
        nlohmann::ordered_json js;
        js["from"] = st.from.cycles();
        js["to"] = st.to.cycles();
        js["rule"] = to_string(st.rule);
        js["char"] = st.witness.chr;
        auto pt = nlohmann::ordered_json::array();
        for (const QZ& c : st.witness.point) pt.push_back(c.str());
        js["point"] = std::move(pt);
        steps.push_back(std::move(js));
    }
    j["steps"] = std::move(steps);
    j["outside_chars"] = chain.outside_chars;
    return j;
}

bool verify_report_json(const nlohmann::ordered_json& j, std::string* first_failure) {
    TypeASetup setup;
    try {
        setup = setup_from_json(j.at("setup"));
    } catch (const nlohmann::ordered_json::exception& e) {
        throw ValidationError(std::string("report json: ") + e.what());
    }
    const auto& edges = j.contains("edges") ? j.at("edges")
                                            : nlohmann::ordered_json::array();
    std::size_t k = 0;
    for (const auto& je : edges) {
        EdgeWitness e;
        try {
            auto w = Perm::parse_cycles(je.at("w").get<std::string>(), setup.n);
            auto wp = Perm::parse_cycles(je.at("w_prime").get<std::string>(), setup.n);
            if (!w || !wp)
                throw ValidationError("report json: bad cycle notation in edge " +
                                      std::to_string(k));
            e.w = *w;
            e.w_prime = *wp;
            e.chr = je.at("char").get<long>();
            require_residue_char(e.chr);
            for (const auto& c : je.at("point"))
                e.point.push_back(QZ::parse(c.get<std::string>()));
        } catch (const nlohmann::ordered_json::exception& ex) {
            throw ValidationError(std::string("report json: ") + ex.what());
        }
        if (!verify_edge_witness(setup, e)) {
            if (first_failure)
                *first_failure = "edge " + std::to_string(k) + " (" + e.w.cycles() +
                                 ", " + e.w_prime.cycles() + ", char " +
                                 std::to_string(e.chr) + ") does not verify";
            return false;
        }
        ++k;
    }
    return true;
}

} // namespace pconn
