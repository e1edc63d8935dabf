#include <paramconn.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int report_error(int code) {
    std::cerr << "error: " << pconn_last_error() << " (status " << code << ")\n";
    return code;
}

int write_output(const char* text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return 0;
    }
    std::ofstream os(out_path, std::ios::binary);
    os << text << "\n";
    if (!os) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return 2;
    }
    return 0;
}

std::string slurp(const std::string& path, bool& ok) {
    std::ifstream is(path, std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    ok = is.good() || is.eof();
    ok = ok && is;
    return ss.str();
}

// Raw setup JSON from --preset or --config, with flag overrides applied.
int load_setup(const std::string& preset, const std::string& config_path,
               const std::string& q, const std::string& alpha,
               const std::string& chars, pconn_setup** out) {
    nlohmann::ordered_json j;
    if (!config_path.empty()) {
        std::ifstream is(config_path, std::ios::binary);
        if (!is) {
            std::cerr << "error: cannot read " << config_path << "\n";
            return 2;
        }
        try {
            j = nlohmann::ordered_json::parse(is);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
    } else {
        char* text = nullptr;
        int rc = pconn_preset_json(preset.c_str(), &text);
        if (rc != 0) return report_error(rc);
        j = nlohmann::ordered_json::parse(text);
        pconn_string_free(text);
    }
    if (!q.empty()) {
        j["q"] = q;
        if (j.contains("p")) j.erase("p");
        try {
            long qv = std::stol(q);
            for (long d = 2; d * d <= qv; ++d)
                if (qv % d == 0) {
                    j["p"] = d;
                    break;
                }
            if (!j.contains("p")) j["p"] = qv;
        } catch (const std::exception&) {
            std::cerr << "error: cannot parse --q value \"" << q << "\"\n";
            return 2;
        }
    }
    if (!alpha.empty()) j["alpha"] = alpha;
    if (!chars.empty()) j["allowed_chars"] = chars;
    int rc = pconn_setup_from_json(j.dump().c_str(), out);
    if (rc != 0) return report_error(rc);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Connected components of tame eigenvalue schemes over W0, "
                 "with exact certificates"};
    app.require_subcommand(1);

    std::string preset = "sl2", config_path, mode = "direct", chars, wtext, out_path;
    std::string q_override, alpha_override;
    int jobs = 0;

    auto add_setup_flags = [&](CLI::App* cmd) {
        cmd->add_option("--preset", preset, "Named setup: sl2, sl6-q7, sl2-outer");
        cmd->add_option("--config", config_path, "Setup config JSON file");
        cmd->add_option("--q", q_override, "Override q (prime power)");
        cmd->add_option("--alpha", alpha_override, "Override alpha, e.g. 1/2");
        cmd->add_option("--chars", chars,
                        "Characteristics: zbar-inv-D, ell-adic:<l>, fbar:<l>, "
                        "or a list like 0,2,3");
        cmd->add_option("--out", out_path, "Write the JSON output here");
    };

    auto* c_components = app.add_subcommand("components", "Partition W0 into "
                                            "connected components");
    add_setup_flags(c_components);
    c_components->add_option("--mode", mode, "direct or exact");
    c_components->add_option("--jobs", jobs, "Worker threads (0 = auto)");

    auto* c_chain = app.add_subcommand("chain", "Certified chain from w to the "
                                       "base vertex");
    add_setup_flags(c_chain);
    c_chain->add_option("--w", wtext, "Permutation in cycle notation")->required();

    auto* c_verify = app.add_subcommand("verify", "Re-check every witness in a "
                                        "component report");
    std::string report_path;
    c_verify->add_option("report", report_path, "Report JSON file")->required();

    auto* c_torus = app.add_subcommand("torus", "Cocycle group of a torus action");
    c_torus->add_option("--config", config_path, "Torus config JSON file")
        ->required();
    c_torus->add_option("--out", out_path, "Write the JSON output here");

    app.add_subcommand("selftest", "Congruence sweep and golden-value suite");

    CLI11_PARSE(app, argc, argv);

    if (c_components->parsed()) {
        pconn_setup* setup = nullptr;
        if (int rc = load_setup(preset, config_path, q_override, alpha_override,
                                chars, &setup))
            return rc;
        char* text = nullptr;
        auto t0 = std::chrono::steady_clock::now();
        int rc = pconn_components_json(setup, mode.c_str(), jobs, &text);
        auto t1 = std::chrono::steady_clock::now();
        pconn_setup_free(setup);
        if (rc != 0) return report_error(rc);
        std::cerr << "elapsed: "
                  << std::chrono::duration<double>(t1 - t0).count() << "s\n";
        rc = write_output(text, out_path);
        pconn_string_free(text);
        return rc;
    }
    if (c_chain->parsed()) {
        pconn_setup* setup = nullptr;
        if (int rc = load_setup(preset, config_path, q_override, alpha_override,
                                chars, &setup))
            return rc;
        char* text = nullptr;
        int rc = pconn_chain_json(setup, wtext.c_str(), &text);
        pconn_setup_free(setup);
        if (rc != 0) return report_error(rc);
        rc = write_output(text, out_path);
        pconn_string_free(text);
        return rc;
    }
    if (c_verify->parsed()) {
        bool ok = false;
        std::string text = slurp(report_path, ok);
        if (!ok) {
            std::cerr << "error: cannot read " << report_path << "\n";
            return 2;
        }
        int rc = pconn_verify_report_json(text.c_str());
        if (rc != 0) return report_error(rc);
        std::cout << "all witnesses verify\n";
        return 0;
    }
    if (c_torus->parsed()) {
        bool ok = false;
        std::string text = slurp(config_path, ok);
        if (!ok) {
            std::cerr << "error: cannot read " << config_path << "\n";
            return 2;
        }
        char* out = nullptr;
        int rc = pconn_torus_json(text.c_str(), &out);
        if (rc != 0) return report_error(rc);
        rc = write_output(out, out_path);
        pconn_string_free(out);
        return rc;
    }
    // selftest
    int rc = pconn_selftest();
    if (rc != 0) return report_error(rc);
    std::cout << "selftest passed\n";
    return 0;
}
