#ifndef EXLAB_SEARCH_HPP
#define EXLAB_SEARCH_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "exlab/combinatorics.hpp"
#include "exlab/graph.hpp"
#include "exlab/spectral.hpp"
#include "exlab/star_forest.hpp"

namespace exlab {

struct SearchOptions {
    int max_n = 9;         // labeled enumeration cap (n == 9 sets the warning flag)
    double tie_tol = kDefaultTieTol;
    double tol = kDefaultTol;
    int shard_bits = 6;    // enumeration subtrees fixed by the first 2^B edge decisions
    int threads = 0;       // 0 = hardware concurrency (capped at 8)
};

// Depth-first search over edge subsets in fixed lexicographic order; a branch
// adding an edge is cut permanently once the partial graph contains the
// pattern through that edge. Visits every labeled free graph exactly once.
long long enumerate_free(int n, const StarForestSpec& spec,
                         const std::function<void(const AdjView&, long long)>& visit,
                         const SearchOptions& opts = {});

struct TuranResult {
    long long ex = 0;
    std::vector<Graph> extremal;  // all maximizers, deduplicated up to isomorphism
    long long visited = 0;        // leaves reached (lower bound; subtrees are pruned)
    bool warned = false;
};

TuranResult turan_number_bruteforce(int n, const StarForestSpec& spec,
                                    const SearchOptions& opts = {});

struct SpectralExtremalResult {
    double rho_max = 0.0;
    std::vector<Graph> extremal;  // all free graphs within tie_tol of the max, up to isomorphism
    SpectralResult best;          // full result for the first extremal graph
    long long scored = 0;         // edge-maximal free graphs scored
    bool warned = false;
};

// Max spectral radius over free graphs. Only edge-maximal free graphs are
// scored: adding an edge never decreases the Perron root, so every maximum is
// attained on an edge-maximal graph.
SpectralExtremalResult spectral_extremal_bruteforce(int n, const StarForestSpec& spec,
                                                    const SearchOptions& opts = {});

// Minimum upper-triangle adjacency bitstring over vertex relabelings
// consistent with the degree partition. Equal forms <=> isomorphic.
struct CanonicalForm {
    int n = 0;
    std::vector<std::uint64_t> bits;
    auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const Graph& g); // n <= 10
bool isomorphic(const Graph& g, const Graph& h);

struct ConstructionDiagnostics {
    bool feasible = false;
    long long edges = -1;
    bool is_spec_free = false;
    long long chen_gap_value = 0;      // gap of the dominating-set-removed graph
    bool chen_hypotheses_hold = false;
    std::vector<int> part_sizes;
};

struct PartitionDiagnostics {
    std::vector<int> part_sizes;  // sizes of a max-crossing partition, descending
    long long crossing = 0;
    long long chen_gap_value = 0;
};

struct VerificationReport {
    int n = 0;
    StarForestSpec spec;
    long long ex_brute = 0;
    long long ex_formula_value = 0;
    std::vector<Graph> extremal;
    double rho_max = 0.0;
    double rho_residual = 0.0;
    double rho_certified_lower = 0.0;
    std::vector<Graph> spectral_extremal;
    bool containment_holds = false;
    bool formula_matches = false;
    double rho_minus_linear = 0.0;  // rho_max - (p-1)/p * n
    ConstructionDiagnostics construction;
    std::vector<PartitionDiagnostics> exsp_diagnostics;
    long long visited = 0;
    bool warned = false;
    long long runtime_ms = 0;
};

// Runs both brute forces and the closed-form counts, and records (never
// asserts) the containment and formula verdicts.
VerificationReport verify_theorem(int n, const StarForestSpec& spec,
                                  const SearchOptions& opts = {});

struct HillClimbResult {
    Graph best;
    double rho = 0.0;
    long long accepted_adds = 0;
    long long accepted_swaps = 0;
};

// Seeded local probe for n beyond the enumeration budget: edge additions that
// keep the graph free, plus (remove, add) swaps accepted on a strict rho
// improvement. Deterministic for a fixed seed.
HillClimbResult hill_climb(int n, const StarForestSpec& spec, long long steps,
                           std::uint64_t seed, const SearchOptions& opts = {});

} // namespace exlab

#endif
