#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <json.hpp>

#include "exlab/constructions.hpp"
#include "exlab/graph6.hpp"
#include "exlab/report.hpp"
#include "exlab/search.hpp"

using namespace exlab;
using nlohmann::json;

namespace {

// Pinned report used for the byte-stable golden check.
VerificationReport pinned_report() {
    VerificationReport r;
    r.n = 6;
    r.spec = StarForestSpec(2, {1});
    r.ex_brute = 9;
    r.ex_formula_value = 9;
    r.extremal = {turan_graph(2, 6)};
    r.rho_max = 3.0;
    r.rho_residual = 1e-13;
    r.rho_certified_lower = 3.0;
    r.spectral_extremal = {turan_graph(2, 6)};
    r.containment_holds = true;
    r.formula_matches = true;
    r.rho_minus_linear = 0.0;
    r.construction.feasible = true;
    r.construction.edges = 9;
    r.construction.is_spec_free = true;
    r.construction.chen_gap_value = 0;
    r.construction.chen_hypotheses_hold = true;
    r.construction.part_sizes = {3, 3};
    r.exsp_diagnostics.push_back({{3, 3}, 9, 0});
    r.visited = 5789;
    r.warned = false;
    r.runtime_ms = 12;
    return r;
}

} // namespace

TEST_CASE("report JSON carries the full schema") {
    std::string text = emit_report(pinned_report());
    json j = json::parse(text);
    for (const char* key : {"n", "p", "ks", "ex_brute", "ex_formula", "extremal_g6", "rho_max",
                            "exsp_g6", "containment_holds", "formula_matches", "diagnostics",
                            "runtime_ms"})
        CHECK_MESSAGE(j.contains(key), key);
    CHECK(j["n"] == 6);
    CHECK(j["p"] == 2);
    CHECK(j["ks"] == json::array({1}));
    CHECK(j["rho_max"] == 3.0);
    CHECK(j["diagnostics"]["construction"]["part_sizes"] == json::array({3, 3}));

    // every extremal_g6 entry decodes back to a graph with ex_brute edges
    for (const auto& s : j["extremal_g6"])
        CHECK(decode_graph6(s.get<std::string>()).size() == j["ex_brute"].get<long long>());
}

TEST_CASE("report JSON is byte-stable") {
    std::ifstream f(EXLAB_TEST_DATA_DIR "/golden_report.json");
    REQUIRE_MESSAGE(f.good(), "golden file missing");
    std::string golden((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    while (!golden.empty() && (golden.back() == '\n' || golden.back() == '\r')) golden.pop_back();
    CHECK(emit_report(pinned_report()) == golden);
}

TEST_CASE("graph6 strings with JSON-reserved bytes survive the trip") {
    // This encoding contains a backslash byte.
    Graph g(4, {{0, 2}, {1, 2}, {0, 3}, {2, 3}});
    std::string enc = encode_graph6(g);
    REQUIRE(enc.find('\\') != std::string::npos);
    VerificationReport r = pinned_report();
    r.extremal = {g};
    r.ex_brute = g.size();
    json j = json::parse(emit_report(r));
    CHECK(j["extremal_g6"][0].get<std::string>() == enc);
    CHECK(decode_graph6(j["extremal_g6"][0].get<std::string>()) == g);
}

TEST_CASE("witness JSON") {
    CHECK(emit_witness(std::nullopt) == "{\"free\":true}");

    Witness w;
    w.centers = {0, 5};
    w.cliques = {{{1, 2}, {3, 4}}, {{6, 7}}};
    json j = json::parse(emit_witness(w));
    CHECK(j["free"] == false);
    CHECK(j["witness"]["centers"] == json::array({0, 5}));
    CHECK(j["witness"]["cliques"][0][1] == json::array({3, 4}));
}

TEST_CASE("DOT output") {
    std::string plain = emit_dot(turan_graph(2, 4));
    int nodes = 0, edges = 0;
    for (std::size_t pos = 0; (pos = plain.find(" -- ", pos)) != std::string::npos; ++pos) ++edges;
    for (int v = 0; v < 4; ++v)
        if (plain.find("  " + std::to_string(v) + ";") != std::string::npos) ++nodes;
    CHECK(nodes == 4);
    CHECK(edges == 4);
    CHECK(plain.find("fillcolor") == std::string::npos);

    PartitionLabeling l(2, {0, 0, 1, 1});
    std::string colored = emit_dot(turan_graph(2, 4), &l);
    CHECK(colored.find("fillcolor") != std::string::npos);
}
