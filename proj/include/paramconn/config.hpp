#pragma once

#include "paramconn/setup.hpp"
#include "paramconn/torus.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace pconn {

/// Strict parse of the setup config schema
///   {n, m, a, q, p, eps_s, eps_fr, alpha: "num/den",
///    inverted_primes: [..], allowed_chars: <chars preset string> | [..]}
/// with defaults m = a = 1, inverted_primes = [], allowed_chars = "all".
/// Unknown fields are rejected.
RawSetup raw_setup_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json raw_setup_to_json(const RawSetup& raw);

/// Named setups: "sl2" (n = 2, q defaults to 5), "sl6-q7" (n = 6, q = 7,
/// alpha = 1/6), "sl2-outer" (eps_s = -1, q = 3).
RawSetup preset_setup(const std::string& name);

std::vector<std::string> preset_names();

/// Characteristic presets: "zbar-inv-D" (or "all"), "ell-adic:<l>",
/// "fbar:<l>", or a comma-separated list like "0,2,3".
AllowedChars parse_chars(const std::string& text);

/// Torus action config:
///   {rank, s_star: [[..]..], fr_star: [[..]..], q, b, inverted_primes: [..]}
/// with inverted_primes defaulting to []. Unknown fields are rejected.
struct TorusConfig {
    TorusAction action;
    std::vector<long> inverted_primes;
};

TorusConfig torus_from_json(const nlohmann::ordered_json& j);

} // namespace pconn
