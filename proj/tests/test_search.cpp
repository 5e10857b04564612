#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "exlab/constructions.hpp"
#include "exlab/errors.hpp"
#include "exlab/freeness.hpp"
#include "exlab/search.hpp"
#include "exlab/spectral.hpp"

using namespace exlab;

TEST_CASE("enumeration counts") {
    CHECK(enumerate_free(3, StarForestSpec(2, {1}), nullptr) == 7);
    CHECK(enumerate_free(2, StarForestSpec(2, {1}), nullptr) == 2);
    CHECK(enumerate_free(2, StarForestSpec(3, {2, 1}), nullptr) == 2);
    CHECK(enumerate_free(4, StarForestSpec(3, {1}), nullptr) == 63);
    CHECK_THROWS_AS(enumerate_free(10, StarForestSpec(2, {1}), nullptr), BudgetError);
}

TEST_CASE("visited graphs are free and distinct") {
    StarForestSpec spec(2, {1});
    long long recheck_fail = 0, seen = 0;
    std::vector<Graph> sample;
    long long count = enumerate_free(5, spec, [&](const AdjView& v, long long edges) {
        ++seen;
        if (seen % 8 == 0) {
            Graph g = Graph::from_rows(v.n, std::vector<std::uint64_t>(v.rows, v.rows + v.n * v.stride), edges);
            if (!is_free(g, spec)) ++recheck_fail;
            sample.push_back(g);
        }
    });
    CHECK(count == seen);
    CHECK(recheck_fail == 0);
    for (std::size_t i = 1; i < sample.size(); ++i) CHECK_FALSE(sample[i] == sample[i - 1]);
}

TEST_CASE("Turan numbers by brute force") {
    TuranResult r5 = turan_number_bruteforce(5, StarForestSpec(2, {1}));
    CHECK(r5.ex == 6);
    REQUIRE(r5.extremal.size() == 1);
    CHECK(isomorphic(r5.extremal[0], turan_graph(2, 5)));

    TuranResult r7 = turan_number_bruteforce(7, StarForestSpec(2, {1}));
    CHECK(r7.ex == 12);
    REQUIRE(r7.extremal.size() == 1);
    CHECK(isomorphic(r7.extremal[0], turan_graph(2, 7)));

    TuranResult b7 = turan_number_bruteforce(7, StarForestSpec(2, {2}));
    CHECK(b7.ex == 13);
}

TEST_CASE("spectral extremal by brute force") {
    SpectralExtremalResult r6 = spectral_extremal_bruteforce(6, StarForestSpec(2, {1}));
    CHECK(std::abs(r6.rho_max - 3.0) < 1e-8);
    REQUIRE(r6.extremal.size() == 1);
    CHECK(isomorphic(r6.extremal[0], turan_graph(2, 6)));

    // The edge and spectral maximizers coincide with T2(n) through n = 8.
    SpectralExtremalResult r8 = spectral_extremal_bruteforce(8, StarForestSpec(2, {1}));
    CHECK(std::abs(r8.rho_max - 4.0) < 1e-8);
    REQUIRE(r8.extremal.size() == 1);
    CHECK(isomorphic(r8.extremal[0], turan_graph(2, 8)));

    SpectralExtremalResult r4 = spectral_extremal_bruteforce(4, StarForestSpec(3, {1}));
    REQUIRE(r4.extremal.size() == 1);
    CHECK(isomorphic(r4.extremal[0], turan_graph(3, 4)));
    CHECK(std::abs(r4.rho_max - spectral_radius(turan_graph(3, 4)).rho) < 1e-8);
}

TEST_CASE("edge-maximal pruning is sound at small n") {
    for (auto [n, ks] : std::vector<std::pair<int, std::vector<int>>>{{5, {1}}, {6, {1}}, {5, {2}}}) {
        StarForestSpec spec(2, ks);
        double unpruned = 0.0;
        enumerate_free(n, spec, [&](const AdjView& v, long long) {
            unpruned = std::max(unpruned, spectral_radius(v).rho);
        });
        SpectralExtremalResult pruned = spectral_extremal_bruteforce(n, spec);
        CHECK(std::abs(pruned.rho_max - unpruned) < 1e-9);
    }
}

TEST_CASE("canonical forms") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        std::vector<Edge> e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) e.emplace_back(u, v);
        Graph g(n, e);
        CanonicalForm f = canonical_form(g);
        for (int rep = 0; rep < 5; ++rep) {
            std::vector<int> perm(n);
            for (int i = 0; i < n; ++i) perm[i] = i;
            for (int i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
            std::vector<Edge> pe;
            for (auto [u, v] : e) pe.emplace_back(perm[u], perm[v]);
            CHECK(canonical_form(Graph(n, pe)) == f);
        }
    }

    CHECK_FALSE(isomorphic(star(3), path(4)));
    CHECK(isomorphic(turan_graph(2, 4), cycle(4)));
    CHECK_THROWS_AS(canonical_form(complete_graph(11)), BudgetError);
}

TEST_CASE("verify_theorem on the Turan/Nikiforov instance") {
    VerificationReport r = verify_theorem(7, StarForestSpec(2, {1}));
    CHECK(r.ex_brute == 12);
    CHECK(r.ex_formula_value == 12);
    CHECK(r.formula_matches);
    CHECK(r.containment_holds);
    CHECK(std::abs(r.rho_max - std::sqrt(12.0)) < 1e-8);
    REQUIRE(r.exsp_diagnostics.size() == 1);
    CHECK(r.exsp_diagnostics[0].part_sizes == std::vector<int>{4, 3});
    CHECK(r.exsp_diagnostics[0].chen_gap_value == 0);
    CHECK(r.construction.feasible);
    CHECK(r.construction.is_spec_free);
    CHECK(r.construction.edges == 12);

    VerificationReport r5 = verify_theorem(5, StarForestSpec(2, {1}));
    CHECK(r5.containment_holds);
}

TEST_CASE("hill climb") {
    StarForestSpec triangle(2, {1});
    HillClimbResult a = hill_climb(20, triangle, 100, 42);
    HillClimbResult b = hill_climb(20, triangle, 100, 42);
    CHECK(a.best == b.best);
    CHECK(a.rho == b.rho);
    CHECK(std::abs(a.rho - quotient_rho(0, {10, 10})) < kDefaultTieTol);

    StarForestSpec bowtie(2, {2});
    double start = spectral_radius(extremal_family_member(14, bowtie)).rho;
    HillClimbResult c = hill_climb(14, bowtie, 300, 7);
    CHECK(c.rho >= start - 2e-12);
    CHECK(is_free(c.best, bowtie));

    // beyond the enumeration budget: never worse than the construction
    double start30 = spectral_radius(extremal_family_member(30, bowtie)).rho;
    HillClimbResult d = hill_climb(30, bowtie, 1000, 11);
    CHECK(d.rho >= start30 - 2e-12);
    CHECK(is_free(d.best, bowtie));
}
