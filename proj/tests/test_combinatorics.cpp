#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "exlab/combinatorics.hpp"
#include "exlab/constructions.hpp"
#include "exlab/errors.hpp"

using namespace exlab;

namespace {

// Test-local matching oracle: branch on the lowest vertex, trying every
// partner or leaving it unmatched. Independent of the bitmask DP.
int matching_oracle(const Graph& g, std::vector<bool>& used, int v) {
    const int n = g.order();
    while (v < n && used[v]) ++v;
    if (v >= n) return 0;
    used[v] = true;
    int best = matching_oracle(g, used, v + 1);
    for (int u = v + 1; u < n; ++u) {
        if (used[u] || !g.has_edge(u, v)) continue;
        used[u] = true;
        best = std::max(best, 1 + matching_oracle(g, used, v + 1));
        used[u] = false;
    }
    used[v] = false;
    return best;
}

int matching_oracle(const Graph& g) {
    std::vector<bool> used(g.order(), false);
    return matching_oracle(g, used, 0);
}

} // namespace

TEST_CASE("f_formula values") {
    CHECK(f_formula(1, 1) == 1);
    CHECK(f_formula(2, 2) == 6);
    CHECK(f_formula(3, 3) == 10);
    CHECK(f_formula(0, 0) == 0);
    CHECK(f_formula(0, 5) == 0);
    CHECK(f_formula(5, 0) == 0);
    CHECK_THROWS_AS(f_formula(-1, 2), ValidationError);
}

TEST_CASE("f_bruteforce oracle values") {
    CHECK(f_bruteforce(1, 1, 4) == 1);
    CHECK(f_bruteforce(1, 2, 5) == 3); // triangle
    CHECK(f_bruteforce(2, 2, 7) == 6); // two triangles
    CHECK_THROWS_AS(f_bruteforce(4, 2, 7), BudgetError);
    CHECK_THROWS_AS(f_bruteforce(2, 2, 10), BudgetError);
}

TEST_CASE("formula agrees with the oracle at small parameters") {
    for (int nu = 1; nu <= 2; ++nu)
        for (int delta = 1; delta <= 2; ++delta)
            CHECK(f_formula(nu, delta) == f_bruteforce(nu, delta, 7));
}

TEST_CASE("f stays below the linear bound") {
    for (int nu = 0; nu <= 50; ++nu)
        for (int delta = 0; delta <= 50; ++delta)
            CHECK(f_formula(nu, delta) <= static_cast<long long>(delta) * nu + nu);
}

TEST_CASE("matching number") {
    CHECK(matching_number(cycle(7)) == 3);
    CHECK(matching_number(star(5)) == 1);
    Graph m3 = disjoint_union(disjoint_union(complete_graph(2), complete_graph(2)),
                              complete_graph(2));
    CHECK(matching_number(m3) == 3);
    CHECK(matching_number(Graph(6, {})) == 0);

    // 12 disjoint edges: 24 non-isolated vertices exceed the DP budget.
    std::vector<Edge> medges;
    for (int i = 0; i < 12; ++i) medges.emplace_back(2 * i, 2 * i + 1);
    CHECK_THROWS_AS(matching_number(Graph(24, medges)), BudgetError);
}

TEST_CASE("matching number agrees with the oracle on every graph up to 6 vertices") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<Edge> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
            std::vector<Edge> e;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if ((mask >> i) & 1u) e.push_back(pairs[i]);
            Graph g(n, e);
            REQUIRE(matching_number(g) == matching_oracle(g));
        }
    }
}

TEST_CASE("Turan counts and h") {
    CHECK(turan_edge_count(2, 7) == 12);
    CHECK(turan_edge_count(3, 9) == 27);
    CHECK(turan_edge_count(5, 4) == 6);
    CHECK(turan_part_sizes(3, 10) == std::vector<int>{4, 3, 3});

    CHECK(h_edges(7, 2, 1) == 12);
    CHECK(h_edges(12, 2, 2) == 41);
    CHECK(h_edges(10, 3, 1) == 33);
    CHECK_THROWS_AS(h_edges(1, 2, 5), ValidationError);
}

TEST_CASE("ex formula") {
    CHECK(ex_formula(10, StarForestSpec(2, {2})) == 26);
    CHECK(ex_formula(7, StarForestSpec(2, {1})) == 12);
    CHECK(ex_formula(12, StarForestSpec(2, {2, 2})) == 42);
}

TEST_CASE("crossing edges and the chen gap") {
    Graph t26 = turan_graph(2, 6);
    PartitionLabeling bip(2, {0, 0, 0, 1, 1, 1});
    CHECK(crossing_edges(t26, bip) == 9);
    CHECK(chen_gap(t26, bip) == 0);

    // T2(10) with one edge inside the larger class: gap = the embedded edge.
    ExtremalFamilyMember m = extremal_family_layout(10, StarForestSpec(2, {2}));
    std::vector<int> assign(10, 0);
    for (int v = m.classes[1].find_first(); v >= 0; v = m.classes[1].find_next(v)) assign[v] = 1;
    PartitionLabeling natural(2, assign);
    CHECK(chen_gap(m.graph, natural) == 1);
    CHECK(chen_hypotheses(m.graph, natural, 2).hold);

    PartitionLabeling all0(2, {0, 0, 0});
    CHECK(crossing_edges(complete_graph(3), all0) == 0);
    CHECK(chen_gap(complete_graph(3), all0) == 3);
}

TEST_CASE("max crossing partition") {
    CrossingPartitionResult c5 = max_crossing_partition(cycle(5), 2);
    CHECK(c5.crossing == 4);
    CHECK(c5.certified);

    CHECK(max_crossing_partition(turan_graph(2, 6), 2).crossing == 9);
    CHECK(max_crossing_partition(complete_graph(3), 2).crossing == 2);

    // Beyond the exhaustive budget the local search still reports a cut.
    CrossingPartitionResult big = max_crossing_partition(turan_graph(2, 40), 2, 1 << 10);
    CHECK_FALSE(big.certified);
    CHECK(big.crossing == 400);
}

TEST_CASE("intersection bound") {
    VertexSet a(8), b(8);
    a.set(1), a.set(2);
    b.set(2), b.set(3);
    IntersectionBound r = intersection_bound({a, b});
    CHECK(r.lhs == 1);
    CHECK(r.rhs == 1);
    CHECK(r.holds);

    CHECK(intersection_bound({a, a}).lhs == 2);
    CHECK(intersection_bound({a, a}).rhs == 2);

    VertexSet c(8), d(8);
    c.set(0), d.set(1);
    CHECK(intersection_bound({c, d}).holds); // 0 >= 2 - 2

    std::mt19937 rng(5);
    for (int trial = 0; trial < 10000; ++trial) {
        int m = 2 + static_cast<int>(rng() % 4);
        std::vector<VertexSet> sets(m, VertexSet(16));
        for (auto& s : sets)
            for (int i = 0; i < 16; ++i)
                if (rng() % 2) s.set(i);
        CHECK(intersection_bound_holds(sets));
    }
}
