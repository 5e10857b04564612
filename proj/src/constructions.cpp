#include "exlab/constructions.hpp"

#include <string>

#include "exlab/combinatorics.hpp"
#include "exlab/errors.hpp"

namespace exlab {

Graph star(int k) {
    if (k < 1) throw ValidationError("star needs k >= 1");
    std::vector<Edge> e;
    for (int i = 1; i <= k; ++i) e.emplace_back(0, i);
    return Graph(k + 1, e);
}

Graph star_forest(const StarForestSpec& spec) {
    Graph g(0, {});
    for (int k : spec.ks) g = disjoint_union(g, star(k));
    return g;
}

Graph complete_graph(int n) {
    if (n < 0) throw ValidationError("complete graph needs n >= 0");
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}

Graph complete_multipartite(const std::vector<int>& parts) {
    int n = 0;
    for (int s : parts) {
        if (s < 0) throw ValidationError("part sizes must be nonnegative");
        n += s;
    }
    std::vector<int> cls;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int j = 0; j < parts[i]; ++j) cls.push_back(static_cast<int>(i));
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (cls[u] != cls[v]) e.emplace_back(u, v);
    return Graph(n, e);
}

Graph turan_graph(int r, int n) { return complete_multipartite(turan_part_sizes(r, n)); }

Graph cycle(int n) {
    if (n < 3) throw ValidationError("cycle needs n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, n - 1);
    return Graph(n, e);
}

Graph path(int n) {
    if (n < 1) throw ValidationError("path needs n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph edge_blowup(const Graph& g, int p) {
    if (p < 1) throw ValidationError("edge blow-up needs p >= 1");
    std::vector<Edge> out = g.edges();
    int next = g.order();
    for (auto [u, v] : g.edges()) {
        std::vector<int> clique{u, v};
        for (int i = 0; i < p - 1; ++i) clique.push_back(next++);
        for (std::size_t a = 0; a < clique.size(); ++a)
            for (std::size_t b = a + 1; b < clique.size(); ++b)
                if (!(clique[a] == u && clique[b] == v)) out.emplace_back(clique[a], clique[b]);
    }
    return Graph(next, out);
}

namespace {

// Strip isolated vertices, keeping label order.
Graph strip_isolated(const Graph& g) {
    VertexSet keep(g.order());
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) > 0) keep.set(v);
    return induced_subgraph(g, keep);
}

// K_{2r+3} minus a near-perfect matching and one extra edge at the uncovered
// vertex: every degree becomes 2r+1 except one vertex at 2r.
Graph odd_delta_component(int r) {
    Graph g = complete_graph(2 * r + 3);
    VertexSet all = VertexSet::full(g.order());
    std::vector<Edge> removed;
    for (int i = 0; i <= r; ++i) removed.emplace_back(2 * i + 1, 2 * i + 2);
    removed.emplace_back(0, 1);
    std::vector<Edge> edges;
    for (auto e : g.edges()) {
        bool drop = false;
        for (auto d : removed) drop = drop || e == d;
        if (!drop) edges.push_back(e);
    }
    return Graph(g.order(), edges);
}

} // namespace

Graph chvatal_hanson_graph(int nu, int delta) {
    if (nu < 0 || delta < 0) throw ValidationError("chvatal_hanson_graph needs nonnegative arguments");
    Graph g(0, {});
    if (nu == 0 || delta == 0) return g;

    if (delta % 2 == 0) {
        int r = delta / 2;
        for (int i = 0; i < nu / r; ++i) g = disjoint_union(g, complete_graph(2 * r + 1));
        for (int i = 0; i < nu % r; ++i) g = disjoint_union(g, star(2 * r));
    } else {
        int r = (delta - 1) / 2;
        for (int i = 0; i < nu / (r + 1); ++i) g = disjoint_union(g, odd_delta_component(r));
        for (int i = 0; i < nu - (r + 1) * (nu / (r + 1)); ++i) g = disjoint_union(g, star(delta));
    }
    g = strip_isolated(g);

    if (matching_number(g) > nu || max_degree(g) > delta || g.size() != f_formula(nu, delta))
        throw VerificationError("chvatal_hanson_graph(" + std::to_string(nu) + "," +
                                std::to_string(delta) + ") failed self-verification");
    return g;
}

bool extremal_family_feasible(int n, const StarForestSpec& spec) {
    int q = spec.q();
    if (n - q + 1 < spec.p) return false;
    int largest = (n - q + 1 + spec.p - 1) / spec.p;
    int embedded = spec.k_min() >= 2 ? chvatal_hanson_graph(spec.k_min() - 1, spec.k_min() - 1).order() : 0;
    return largest >= embedded;
}

ExtremalFamilyMember extremal_family_layout(int n, const StarForestSpec& spec) {
    const int q = spec.q();
    const int w = q - 1;
    if (n - q + 1 < spec.p)
        throw ValidationError("extremal family member needs n - q + 1 >= p");

    Graph embed = chvatal_hanson_graph(spec.k_min() - 1, spec.k_min() - 1);
    std::vector<int> parts = turan_part_sizes(spec.p, n - q + 1);
    if (parts[0] < embed.order())
        throw ValidationError("largest Turan class too small for the embedded graph");

    std::vector<Edge> edges;
    for (int u = 0; u < w; ++u) {
        for (int v = u + 1; v < w; ++v) edges.emplace_back(u, v);
        for (int v = w; v < n; ++v) edges.emplace_back(u, v);
    }
    ExtremalFamilyMember out{Graph(), VertexSet(n), {}, VertexSet(n)};
    for (int u = 0; u < w; ++u) out.clique.set(u);

    std::vector<int> cls(n, -1);
    int base = w;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        VertexSet c(n);
        for (int j = 0; j < parts[i]; ++j) {
            cls[base + j] = static_cast<int>(i);
            c.set(base + j);
        }
        out.classes.push_back(c);
        base += parts[i];
    }
    for (int u = w; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (cls[u] != cls[v]) edges.emplace_back(u, v);

    for (auto [a, b] : embed.edges()) edges.emplace_back(w + a, w + b);
    for (int a = 0; a < embed.order(); ++a) out.embedded.set(w + a);

    out.graph = Graph(n, edges);
    if (out.graph.size() != ex_formula(n, spec))
        throw VerificationError("extremal family member has wrong edge count");
    return out;
}

Graph extremal_family_member(int n, const StarForestSpec& spec) {
    return extremal_family_layout(n, spec).graph;
}

} // namespace exlab
