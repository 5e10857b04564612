#ifndef EXLAB_GRAPH_HPP
#define EXLAB_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "exlab/bitset.hpp"

namespace exlab {

using Edge = std::pair<int, int>;
using VertexSet = Bitset;

// Non-owning view of a packed adjacency matrix (row-major bitset rows).
// Search and enumeration code mutates scratch rows and checks them through
// this view without materializing Graph values.
struct AdjView {
    int n = 0;
    int stride = 0; // words per row
    const std::uint64_t* rows = nullptr;

    const std::uint64_t* row(int v) const { return rows + static_cast<std::size_t>(v) * stride; }
    bool has_edge(int u, int v) const { return (row(u)[v >> 6] >> (v & 63)) & 1u; }
    int degree(int v) const {
        int d = 0;
        const std::uint64_t* r = row(v);
        for (int i = 0; i < stride; ++i) d += std::popcount(r[i]);
        return d;
    }
};

// Immutable simple graph on vertices 0..n-1. Adjacency is stored as packed
// bitset rows; all operations return new values.
class Graph {
public:
    Graph() = default;
    // Validates: endpoints in range, no self-loops, no duplicate edges.
    Graph(int n, const std::vector<Edge>& edges);

    // Trusted constructor from prebuilt rows (must be symmetric, zero diagonal).
    static Graph from_rows(int n, std::vector<std::uint64_t> rows, long long edge_count);

    int order() const { return n_; }
    long long size() const { return m_; } // number of edges

    bool has_edge(int u, int v) const { return view().has_edge(u, v); }
    int degree(int v) const;
    VertexSet neighbors(int v) const;

    // Edges in lexicographic (u,v) order, u < v.
    std::vector<Edge> edges() const;

    AdjView view() const { return {n_, stride_, adj_.data()}; }
    int stride() const { return stride_; }

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    int stride_ = 0;
    long long m_ = 0;
    std::vector<std::uint64_t> adj_;
};

int max_degree(const Graph& g);
int min_degree(const Graph& g);

// H's vertices are relabeled by offset |V(G)|.
Graph disjoint_union(const Graph& g, const Graph& h);
// Union plus all edges between V(G) and V(H).
Graph join(const Graph& g, const Graph& h);
// Keeps vertices of s (relabeled in increasing original order) and the edges inside s.
Graph induced_subgraph(const Graph& g, const VertexSet& s);
Graph complement(const Graph& g);
// Connected components as vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

} // namespace exlab

#endif
