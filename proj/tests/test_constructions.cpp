#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "exlab/combinatorics.hpp"
#include "exlab/constructions.hpp"
#include "exlab/errors.hpp"
#include "exlab/freeness.hpp"

using namespace exlab;

TEST_CASE("stars") {
    CHECK(star(1) == complete_graph(2));
    Graph s3 = star(3);
    CHECK(s3.order() == 4);
    CHECK(s3.size() == 3);
    CHECK(s3.degree(0) == 3);
    CHECK_THROWS_AS(star(0), ValidationError);
}

TEST_CASE("star forests") {
    Graph p = star_forest(StarForestSpec(2, {2}));
    CHECK(p.order() == 3);
    CHECK(p.size() == 2);

    Graph f = star_forest(StarForestSpec(2, {2, 1}));
    CHECK(f.order() == 5);
    CHECK(f.size() == 3);
    CHECK(components(f).size() == 2);

    Graph g = star_forest(StarForestSpec(2, {3, 2, 1}));
    CHECK(g.order() == 9);
    CHECK(g.size() == 6);
}

TEST_CASE("spec normalization") {
    StarForestSpec s(2, {1, 3, 2});
    CHECK(s.ks == std::vector<int>{3, 2, 1});
    CHECK(s.k_min() == 1);
    CHECK(s.q() == 3);
    CHECK_THROWS_AS(StarForestSpec(0, {1}), ValidationError);
    CHECK_THROWS_AS(StarForestSpec(2, {}), ValidationError);
    CHECK_THROWS_AS(StarForestSpec(2, {0}), ValidationError);
}

TEST_CASE("Turan graphs") {
    Graph t27 = turan_graph(2, 7);
    CHECK(t27.size() == 12);
    CHECK(max_degree(t27) == 4);
    CHECK(min_degree(t27) == 3);

    CHECK(turan_graph(3, 9).size() == 27);
    CHECK(turan_graph(5, 4) == complete_graph(4));
    CHECK_THROWS_AS(turan_graph(0, 5), ValidationError);

    for (int r = 1; r <= 5; ++r)
        for (int n = 0; n <= 12; ++n)
            CHECK(turan_graph(r, n).size() == turan_edge_count(r, n));
}

TEST_CASE("Turan graphs omit the next clique") {
    for (int r = 2; r <= 4; ++r)
        for (int n = r; n <= 10; ++n)
            CHECK(is_free(turan_graph(r, n), StarForestSpec(r, {1})));
}

TEST_CASE("disjoint union is associative with sequential labels") {
    Graph a = star(2), b = complete_graph(3), c = path(2);
    CHECK(disjoint_union(disjoint_union(a, b), c) == disjoint_union(a, disjoint_union(b, c)));
}

TEST_CASE("edge blow-up") {
    for (int p = 1; p <= 4; ++p)
        CHECK(edge_blowup(complete_graph(2), p) == complete_graph(p + 1));

    Graph bowtie = edge_blowup(star(2), 2);
    CHECK(bowtie.order() == 5);
    CHECK(bowtie.size() == 6);
    CHECK(bowtie.degree(0) == 4); // two triangles share the center

    Graph s33 = edge_blowup(star(3), 2);
    CHECK(s33.order() == 7);
    CHECK(s33.size() == 9);
}

TEST_CASE("edge blow-up count identities on random graphs") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng() % 7);
        std::vector<Edge> e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) e.emplace_back(u, v);
        Graph g(n, e);
        CHECK(edge_blowup(g, 1) == g);
        for (int p = 2; p <= 3; ++p) {
            Graph b = edge_blowup(g, p);
            CHECK(b.order() == g.order() + (p - 1) * g.size());
            CHECK(b.size() == g.size() * (p + 1) * p / 2);
        }
    }
}

TEST_CASE("Chvatal-Hanson graphs") {
    CHECK(chvatal_hanson_graph(1, 1) == complete_graph(2));

    Graph g22 = chvatal_hanson_graph(2, 2);
    CHECK(g22 == disjoint_union(complete_graph(3), complete_graph(3)));

    Graph g33 = chvatal_hanson_graph(3, 3);
    CHECK(g33.size() == 10);
    auto comps = components(g33);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].count() == 5);
    CHECK(induced_subgraph(g33, comps[0]).size() == 7);
    CHECK(induced_subgraph(g33, comps[1]).size() == 3);

    CHECK(chvatal_hanson_graph(0, 0).order() == 0);
}

TEST_CASE("Chvatal-Hanson self-verification across the small grid") {
    for (int nu = 1; nu <= 5; ++nu)
        for (int delta = 1; delta <= 5; ++delta) {
            Graph g = chvatal_hanson_graph(nu, delta); // throws on violation
            CHECK(g.size() == f_formula(nu, delta));
            CHECK(matching_number(g) <= nu);
            CHECK(max_degree(g) <= delta);
        }
}

TEST_CASE("extremal family members") {
    Graph m = extremal_family_member(12, StarForestSpec(2, {2, 2}));
    CHECK(m.order() == 12);
    CHECK(m.size() == 42);

    CHECK(extremal_family_member(7, StarForestSpec(2, {1})) == turan_graph(2, 7));

    CHECK(extremal_family_member(10, StarForestSpec(2, {2})).size() == 26);

    // CH(2,2) needs 6 vertices; the largest class of T3(8) has only 3.
    CHECK_FALSE(extremal_family_feasible(8, StarForestSpec(3, {3})));
    CHECK_THROWS_AS(extremal_family_member(8, StarForestSpec(3, {3})), ValidationError);
    CHECK_THROWS_AS(extremal_family_member(3, StarForestSpec(3, {1, 1})), ValidationError);
}

TEST_CASE("extremal family layout") {
    ExtremalFamilyMember m = extremal_family_layout(13, StarForestSpec(2, {2, 2}));
    CHECK(m.clique.count() == 1);
    CHECK(m.clique.test(0));
    REQUIRE(m.classes.size() == 2);
    CHECK(m.classes[0].count() == 6);
    CHECK(m.classes[1].count() == 6);
    CHECK(m.embedded.count() == 2);
    CHECK(m.embedded.is_subset_of(m.classes[0]));
    // The dominating vertex sees everything.
    CHECK(m.graph.degree(0) == 12);
}
