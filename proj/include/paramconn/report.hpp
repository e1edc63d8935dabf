#pragma once

#include "paramconn/chains.hpp"
#include "paramconn/setup.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pconn {

enum class Mode { direct, exact };

std::string to_string(Mode mode);
Mode parse_mode(const std::string& text);

struct ComponentStats {
    std::size_t vertices = 0;
    std::size_t pairs = 0;
    std::size_t solver_calls = 0;
    std::size_t translated_merges = 0;
    std::size_t components = 0;
};

struct ComponentReport {
    TypeASetup setup;
    Mode mode = Mode::direct;
    std::vector<Perm> vertices;
    std::vector<EdgeWitness> edges;             // merge edges, a spanning forest
    std::vector<std::vector<Perm>> partition;   // components by least vertex
    std::string verdict;                        // connected / direct-disconnected
    ComponentStats stats;
};

/// Full pairwise computation over W0. Deterministic partition and edge list
/// for any jobs value; jobs <= 0 means hardware parallelism.
ComponentReport components(const TypeASetup& setup, Mode mode, int jobs = 1);

struct TheoremVerdict {
    bool pass = false;
    std::string detail;
    std::optional<std::pair<Perm, Perm>> offending_pair;
    ComponentReport report;
    std::vector<Chain> chains; // one per component representative
};

/// Connectedness of W0/~ over {0} u (primes outside D), with every edge and
/// chain certificate re-verified.
TheoremVerdict theorem_check(const TypeASetup& setup);

nlohmann::ordered_json setup_to_json(const TypeASetup& setup);
TypeASetup setup_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json report_to_json(const ComponentReport& report);
nlohmann::ordered_json chain_to_json(const Chain& chain);

/// Re-checks every edge witness in a serialized report with the independent
/// checker only. On failure names the first bad edge.
bool verify_report_json(const nlohmann::ordered_json& j, std::string* first_failure);

} // namespace pconn
