#include "exlab/graph.hpp"

#include <algorithm>
#include <string>

#include "exlab/errors.hpp"

namespace exlab {

namespace {
int words_for(int n) { return n == 0 ? 0 : (n + 63) / 64; }
} // namespace

Graph::Graph(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw ValidationError("vertex count must be nonnegative");
    n_ = n;
    stride_ = words_for(n);
    adj_.assign(static_cast<std::size_t>(n_) * stride_, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ValidationError("edge endpoint out of range: (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
        if (view().has_edge(u, v))
            throw ValidationError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        adj_[static_cast<std::size_t>(u) * stride_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
        adj_[static_cast<std::size_t>(v) * stride_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
        ++m_;
    }
}

Graph Graph::from_rows(int n, std::vector<std::uint64_t> rows, long long edge_count) {
    Graph g;
    g.n_ = n;
    g.stride_ = words_for(n);
    g.m_ = edge_count;
    g.adj_ = std::move(rows);
    return g;
}

int Graph::degree(int v) const {
    if (v < 0 || v >= n_) throw ValidationError("vertex out of range: " + std::to_string(v));
    return view().degree(v);
}

VertexSet Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw ValidationError("vertex out of range: " + std::to_string(v));
    VertexSet s(n_);
    const std::uint64_t* r = view().row(v);
    std::copy(r, r + stride_, s.data());
    return s;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> e;
    e.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) e.emplace_back(u, v);
    return e;
}

int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
    return d;
}

int min_degree(const Graph& g) {
    if (g.order() == 0) return 0;
    int d = g.degree(0);
    for (int v = 1; v < g.order(); ++v) d = std::min(d, g.degree(v));
    return d;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    std::vector<Edge> e = g.edges();
    int off = g.order();
    for (auto [u, v] : h.edges()) e.emplace_back(u + off, v + off);
    return Graph(g.order() + h.order(), e);
}

Graph join(const Graph& g, const Graph& h) {
    std::vector<Edge> e = g.edges();
    int off = g.order();
    for (auto [u, v] : h.edges()) e.emplace_back(u + off, v + off);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v) e.emplace_back(u, off + v);
    return Graph(g.order() + h.order(), e);
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.universe() > g.order()) {
        // Allow a smaller universe only if it still indexes valid vertices.
        throw ValidationError("vertex set universe exceeds graph order");
    }
    std::vector<int> keep = s.to_vector();
    std::vector<int> pos(g.order(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<int>(i);
    std::vector<Edge> e;
    for (int u : keep) {
        VertexSet nb = g.neighbors(u);
        for (int v = nb.find_first(); v >= 0; v = nb.find_next(v))
            if (v > u && pos[v] >= 0 && pos[u] >= 0) e.emplace_back(pos[u], pos[v]);
    }
    return Graph(static_cast<int>(keep.size()), e);
}

Graph complement(const Graph& g) {
    std::vector<Edge> e;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) e.emplace_back(u, v);
    return Graph(g.order(), e);
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    std::vector<bool> seen(g.order(), false);
    for (int s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        VertexSet comp(g.order());
        std::vector<int> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.set(u);
            VertexSet nb = g.neighbors(u);
            for (int v = nb.find_first(); v >= 0; v = nb.find_next(v))
                if (!seen[v]) {
                    seen[v] = true;
                    stack.push_back(v);
                }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

} // namespace exlab
