#include "paramconn/config.hpp"

#include "paramconn/errors.hpp"

#include <set>

namespace pconn {

namespace {

using json = nlohmann::ordered_json;

void reject_unknown(const json& j, const std::set<std::string>& known,
                    const std::string& where) {
    if (!j.is_object())
        throw ValidationError(where + ": expected a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!known.count(it.key()))
            throw ValidationError(where + ": unknown field \"" + it.key() + "\"");
}

Outer parse_eps(const json& v, const std::string& name) {
    if (v.is_number_integer()) {
        long s = v.get<long>();
        if (s == 1) return Outer::plus;
        if (s == -1) return Outer::minus;
    }
    throw ValidationError("config: " + name + " must be 1 or -1");
}

} // namespace

RawSetup raw_setup_from_json(const json& j) {
    reject_unknown(j,
                   {"n", "m", "a", "q", "p", "eps_s", "eps_fr", "alpha",
                    "inverted_primes", "allowed_chars"},
                   "setup config");
    RawSetup raw;
    try {
        raw.n = j.at("n").get<std::size_t>();
        raw.m = j.value("m", std::size_t{1});
        raw.a = j.value("a", std::size_t{1});
        if (j.at("q").is_string())
            raw.q = mpz_class(j.at("q").get<std::string>());
        else
            raw.q = mpz_class(j.at("q").get<long>());
        raw.p = j.at("p").get<long>();
        raw.eps_s = j.contains("eps_s") ? parse_eps(j.at("eps_s"), "eps_s")
                                        : Outer::plus;
        raw.eps_fr = j.contains("eps_fr") ? parse_eps(j.at("eps_fr"), "eps_fr")
                                          : Outer::plus;
        raw.alpha_raw = QZ::parse(j.value("alpha", std::string("0")));
        raw.inverted_primes =
            j.value("inverted_primes", std::vector<long>{});
        if (j.contains("allowed_chars")) {
            const auto& ac = j.at("allowed_chars");
            if (ac.is_string())
                raw.allowed = parse_chars(ac.get<std::string>());
            else
                raw.allowed = AllowedChars::explicit_list(ac.get<std::vector<long>>());
        }
    } catch (const json::exception& e) {
        throw ValidationError(std::string("setup config: ") + e.what());
    }
    return raw;
}

json raw_setup_to_json(const RawSetup& raw) {
    json j;
    j["n"] = raw.n;
    j["m"] = raw.m;
    j["a"] = raw.a;
    j["q"] = raw.q.get_str();
    j["p"] = raw.p;
    j["eps_s"] = sign_of(raw.eps_s);
    j["eps_fr"] = sign_of(raw.eps_fr);
    j["alpha"] = raw.alpha_raw.str();
    j["inverted_primes"] = raw.inverted_primes;
    if (raw.allowed.all_primes && raw.allowed.include_zero) {
        j["allowed_chars"] = "all";
    } else {
        std::vector<long> listed;
        if (raw.allowed.include_zero) listed.push_back(0);
        for (long c : raw.allowed.listed) listed.push_back(c);
        j["allowed_chars"] = listed;
    }
    return j;
}

RawSetup preset_setup(const std::string& name) {
    RawSetup raw;
    if (name == "sl2") {
        raw.n = 2;
        raw.q = 5;
        raw.p = 5;
        raw.alpha_raw = QZ(0, 1);
    } else if (name == "sl6-q7") {
        raw.n = 6;
        raw.q = 7;
        raw.p = 7;
        raw.alpha_raw = QZ(1, 6);
    } else if (name == "sl2-outer") {
        raw.n = 2;
        raw.q = 3;
        raw.p = 3;
        raw.eps_s = Outer::minus;
        raw.alpha_raw = QZ(1, 2);
    } else {
        throw ValidationError("unknown preset \"" + name + "\"");
    }
    return raw;
}

std::vector<std::string> preset_names() { return {"sl2", "sl6-q7", "sl2-outer"}; }

AllowedChars parse_chars(const std::string& text) {
    if (text == "zbar-inv-D" || text == "all") return AllowedChars::all();
    auto tail_long = [&](std::size_t pos) {
        try {
            return std::stol(text.substr(pos));
        } catch (const std::exception&) {
            throw ValidationError("chars: cannot parse \"" + text + "\"");
        }
    };
    if (text.rfind("ell-adic:", 0) == 0) return AllowedChars::ell_adic(tail_long(9));
    if (text.rfind("fbar:", 0) == 0) return AllowedChars::fbar(tail_long(5));
    std::vector<long> listed;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos
                                               ? std::string::npos
                                               : comma - pos);
        try {
            listed.push_back(std::stol(tok));
        } catch (const std::exception&) {
            throw ValidationError("chars: cannot parse \"" + text + "\"");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return AllowedChars::explicit_list(std::move(listed));
}

TorusConfig torus_from_json(const json& j) {
    reject_unknown(j, {"rank", "s_star", "fr_star", "q", "b", "inverted_primes"},
                   "torus config");
    TorusConfig cfg;
    try {
        cfg.action.rank = j.at("rank").get<std::size_t>();
        auto read_matrix = [&](const char* key) {
            auto rows = j.at(key).get<std::vector<std::vector<long>>>();
            IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i].size() != m.cols())
                    throw ValidationError(std::string("torus config: ragged ") + key);
                for (std::size_t k = 0; k < rows[i].size(); ++k)
                    m.at(i, k) = rows[i][k];
            }
            return m;
        };
        cfg.action.s_star = read_matrix("s_star");
        cfg.action.fr_star = read_matrix("fr_star");
        cfg.action.q = mpz_class(j.at("q").get<long>());
        cfg.action.b = j.at("b").get<long>();
        cfg.inverted_primes = j.value("inverted_primes", std::vector<long>{});
    } catch (const json::exception& e) {
        throw ValidationError(std::string("torus config: ") + e.what());
    }
    cfg.action.validate();
    for (long ell : cfg.inverted_primes) require_residue_char(ell);
    return cfg;
}

} // namespace pconn
