#include "paramconn.h"

#include "paramconn/chains.hpp"
#include "paramconn/config.hpp"
#include "paramconn/errors.hpp"
#include "paramconn/report.hpp"
#include "paramconn/selftest.hpp"
#include "paramconn/torus.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

struct pconn_setup {
    pconn::TypeASetup value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int fail(int code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        int code = fn();
        if (code == 0) g_last_error.clear();
        return code;
    } catch (const pconn::ValidationError& e) {
        return fail(2, e.what());
    } catch (const pconn::UnsupportedMode& e) {
        return fail(2, e.what());
    } catch (const pconn::CapacityError& e) {
        return fail(3, e.what());
    } catch (const pconn::InternalError& e) {
        return fail(4, e.what());
    } catch (const nlohmann::ordered_json::exception& e) {
        return fail(2, e.what());
    } catch (const std::exception& e) {
        return fail(2, e.what());
    }
}

int emit(const nlohmann::ordered_json& j, char** out_json) {
    if (!out_json) return fail(2, "null output pointer");
    *out_json = dup_string(j.dump(2));
    return *out_json ? 0 : fail(2, "allocation failure");
}

} // namespace

extern "C" {

int pconn_preset_json(const char* name, char** out_json) {
    return guarded([&] {
        if (!name) return fail(2, "null preset name");
        return emit(pconn::raw_setup_to_json(pconn::preset_setup(name)), out_json);
    });
}

int pconn_setup_from_json(const char* json_text, pconn_setup** out) {
    return guarded([&] {
        if (!json_text || !out) return fail(2, "null argument");
        auto j = nlohmann::ordered_json::parse(json_text);
        auto setup = pconn::reduce_setup(pconn::raw_setup_from_json(j));
        *out = new pconn_setup{std::move(setup)};
        return 0;
    });
}

void pconn_setup_free(pconn_setup* setup) { delete setup; }

int pconn_setup_json(const pconn_setup* setup, char** out_json) {
    return guarded([&] {
        if (!setup) return fail(2, "null setup");
        return emit(pconn::setup_to_json(setup->value), out_json);
    });
}

int pconn_components_json(const pconn_setup* setup, const char* mode, int jobs,
                          char** out_json) {
    return guarded([&] {
        if (!setup) return fail(2, "null setup");
        pconn::Mode m = pconn::parse_mode(mode ? mode : "direct");
        auto report = pconn::components(setup->value, m, jobs);
        return emit(pconn::report_to_json(report), out_json);
    });
}

int pconn_chain_json(const pconn_setup* setup, const char* w_cycles,
                     char** out_json) {
    return guarded([&] {
        if (!setup || !w_cycles) return fail(2, "null argument");
        auto w = pconn::Perm::parse_cycles(w_cycles, setup->value.n);
        if (!w)
            return fail(2, std::string("cannot parse permutation \"") + w_cycles +
                               "\"");
        auto chain = pconn::chain_to_base(setup->value, *w);
        if (!pconn::verify_chain(setup->value, chain))
            return fail(4, "chain failed verification");
        return emit(pconn::chain_to_json(chain), out_json);
    });
}

int pconn_verify_report_json(const char* report_json) {
    return guarded([&] {
        if (!report_json) return fail(2, "null report");
        auto j = nlohmann::ordered_json::parse(report_json);
        std::string why;
        if (!pconn::verify_report_json(j, &why)) return fail(5, why);
        return 0;
    });
}

int pconn_torus_json(const char* config_json, char** out_json) {
    return guarded([&] {
        if (!config_json) return fail(2, "null config");
        auto j = nlohmann::ordered_json::parse(config_json);
        auto cfg = pconn::torus_from_json(j);
        auto g = pconn::cocycle_group(cfg.action);
        nlohmann::ordered_json out;
        out["free_rank"] = g.free_rank;
        auto tor = nlohmann::ordered_json::array();
        for (const auto& d : g.torsion) tor.push_back(d.get_str());
        out["torsion"] = std::move(tor);
        out["inverted_primes"] = cfg.inverted_primes;
        out["connected"] = pconn::is_connected_over(g, cfg.inverted_primes);
        return emit(out, out_json);
    });
}

int pconn_selftest(void) {
    return guarded([&] {
        if (auto why = pconn::selftest()) return fail(6, *why);
        return 0;
    });
}

const char* pconn_last_error(void) { return g_last_error.c_str(); }

void pconn_string_free(char* s) { std::free(s); }

} // extern "C"
