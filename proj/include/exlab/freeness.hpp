#ifndef EXLAB_FREENESS_HPP
#define EXLAB_FREENESS_HPP

#include <optional>
#include <vector>

#include "exlab/graph.hpp"
#include "exlab/star_forest.hpp"

namespace exlab {

// Explicit embedding of the blown-up star forest: centers[i] carries ks[i]
// vertex-disjoint p-sets, each inducing K_{p+1} together with the center.
struct Witness {
    std::vector<int> centers;
    std::vector<std::vector<std::vector<int>>> cliques;
};

// Backtracking searcher for copies of the blown-up star forest. Reusable so
// enumeration loops can bind it once per scratch adjacency and keep its
// buffers warm.
class StarForestSearcher {
public:
    StarForestSearcher(const StarForestSpec& spec);

    void bind(const AdjView& g);

    // Full search; fills *out when a copy exists and out != nullptr.
    bool find(Witness* out);

    // Does g contain a copy that uses edge uv? The edge must be present.
    // Complete when g minus uv is free, which is how enumeration calls it.
    bool contains_via_edge(int u, int v);

private:
    bool search(int idx, int min_center);
    bool pack(int center, int star, int remaining, const std::uint64_t* avail);
    bool extend_clique(int center, int star, int remaining, const std::uint64_t* cand,
                       int min_v, int need, const std::uint64_t* avail, int clique_begin);
    bool rest_feasible(int idx, int banned_center);

    std::uint64_t* buffer(int depth);
    int count_at_least(const std::uint64_t* words, int from) const;

    StarForestSpec spec_;
    std::vector<int> stars_;  // star sizes left to place, non-increasing
    AdjView g_{};
    int stride_ = 0;
    std::vector<std::uint64_t> used_;
    std::vector<int> centers_;
    std::vector<int> clique_scratch_;
    std::vector<std::vector<std::vector<int>>> cliques_;
    bool record_ = false;
    std::vector<std::vector<std::uint64_t>> pool_;
    int depth_ = 0;
};

// First witness found under the deterministic search order, if any.
std::optional<Witness> find_blowup_star_forest(const Graph& g, const StarForestSpec& spec);

// True when g contains no copy of the blown-up star forest. A witness is
// re-verified against its invariants before "not free" is reported.
bool is_free(const Graph& g, const StarForestSpec& spec);
bool is_free(const AdjView& g, const StarForestSpec& spec);

// Checks the Witness invariants against the host.
bool witness_valid(const Graph& g, const StarForestSpec& spec, const Witness& w);

// Generic subgraph (not induced) containment by backtracking with degree and
// neighborhood pruning; the independent oracle for the specialized searcher.
// Budget: pattern order <= 12.
bool generic_contains(const Graph& host, const Graph& pattern);

} // namespace exlab

#endif
