#include <paramconn.h>

#include <doctest.h>

#include <json.hpp>

#include <string>

using json = nlohmann::ordered_json;

namespace {

std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out(s);
    pconn_string_free(s);
    return out;
}

} // namespace

TEST_CASE("preset to components to verify round trip") {
    char* raw = nullptr;
    REQUIRE(pconn_preset_json("sl2", &raw) == 0);
    json cfg = json::parse(take(raw));
    cfg["alpha"] = "1/2";

    pconn_setup* setup = nullptr;
    REQUIRE(pconn_setup_from_json(cfg.dump().c_str(), &setup) == 0);

    char* echo = nullptr;
    REQUIRE(pconn_setup_json(setup, &echo) == 0);
    json sj = json::parse(take(echo));
    CHECK(sj["n"] == 2);
    CHECK(sj["alpha"] == "1/2");

    char* rep = nullptr;
    REQUIRE(pconn_components_json(setup, "direct", 1, &rep) == 0);
    std::string rep_text = take(rep);
    json rj = json::parse(rep_text);
    CHECK(rj["verdict"] == "connected");
    REQUIRE(rj["edges"].size() == 1);
    CHECK(rj["edges"][0]["char"] == 2);

    CHECK(pconn_verify_report_json(rep_text.c_str()) == 0);

    json tampered = rj;
    tampered["edges"][0]["point"][0] = "1/3";
    CHECK(pconn_verify_report_json(tampered.dump().c_str()) == 5);
    CHECK(std::string(pconn_last_error()).find("edge 0") != std::string::npos);

    pconn_setup_free(setup);
}

TEST_CASE("chain json through the C API") {
    char* raw = nullptr;
    REQUIRE(pconn_preset_json("sl6-q7", &raw) == 0);
    pconn_setup* setup = nullptr;
    REQUIRE(pconn_setup_from_json(take(raw).c_str(), &setup) == 0);

    char* out = nullptr;
    REQUIRE(pconn_chain_json(setup, "(1 2 3 4 5 6)", &out) == 0);
    json cj = json::parse(take(out));
    CHECK(cj["steps"].size() == 3);
    CHECK(cj["steps"][0]["rule"] == "split-cycle");

    CHECK(pconn_chain_json(setup, "(1 9)", &out) == 2);
    pconn_setup_free(setup);
}

TEST_CASE("error codes") {
    pconn_setup* setup = nullptr;
    CHECK(pconn_setup_from_json("{not json", &setup) == 2);
    CHECK(pconn_last_error()[0] != '\0');
    CHECK(pconn_setup_from_json(R"({"n":2,"q":6,"p":3})", &setup) == 2);
    char* text = nullptr;
    CHECK(pconn_preset_json("nope", &text) == 2);

    // Capacity: n = 9 exceeds the enumeration bound at components time.
    REQUIRE(pconn_setup_from_json(R"({"n":9,"q":2,"p":2})", &setup) == 0);
    char* out = nullptr;
    CHECK(pconn_components_json(setup, "direct", 1, &out) == 3);
    CHECK(pconn_components_json(setup, "sideways", 1, &out) == 2);
    pconn_setup_free(setup);
}

TEST_CASE("torus endpoint") {
    const char* cfg = R"({
      "rank": 1, "s_star": [[1]], "fr_star": [[1]], "q": 5, "b": 8,
      "inverted_primes": [2]
    })";
    char* out = nullptr;
    REQUIRE(pconn_torus_json(cfg, &out) == 0);
    json j = json::parse(take(out));
    CHECK(j["free_rank"] == 1);
    CHECK(j["torsion"] == json::array({"4"}));
    CHECK(j["connected"] == false);

    const char* bad = R"({"rank": 1, "s_star": [[2]], "fr_star": [[1]], "q": 5, "b": 1})";
    CHECK(pconn_torus_json(bad, &out) == 2);
}

TEST_CASE("selftest") {
    CHECK(pconn_selftest() == 0);
    CHECK(pconn_last_error()[0] == '\0');
}
