#include "exlab/combinatorics.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>

#include "exlab/errors.hpp"

namespace exlab {

long long f_formula(int nu, int delta) {
    if (nu < 0 || delta < 0) throw ValidationError("f(nu,delta) needs nonnegative arguments");
    if (nu == 0 || delta == 0) return 0;
    long long half_floor = delta / 2;
    long long half_ceil = (delta + 1) / 2;
    return static_cast<long long>(delta) * nu + half_floor * (nu / half_ceil);
}

namespace {

// Max matching over adjacency masks; branch on the lowest live vertex.
int mask_matching(const std::vector<std::uint32_t>& adj, std::uint32_t live) {
    if (!live) return 0;
    int v = std::countr_zero(live);
    std::uint32_t rest = live & ~(std::uint32_t{1} << v);
    int best = mask_matching(adj, rest); // v stays unmatched
    std::uint32_t cand = adj[v] & rest;
    while (cand) {
        int u = std::countr_zero(cand);
        cand &= cand - 1;
        best = std::max(best, 1 + mask_matching(adj, rest & ~(std::uint32_t{1} << u)));
        if (best * 2 >= std::popcount(live)) break; // cannot improve
    }
    return best;
}

} // namespace

long long f_bruteforce(int nu, int delta, int max_vertices) {
    if (nu < 0 || delta < 0 || max_vertices < 0)
        throw ValidationError("f_bruteforce needs nonnegative arguments");
    if (nu > 3 || delta > 3 || max_vertices > 9)
        throw BudgetError("f_bruteforce budget is nu,delta <= 3 and max_vertices <= 9");
    if (nu == 0 || delta == 0 || max_vertices < 2) return 0;

    const int n = max_vertices;
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    const int m = static_cast<int>(pairs.size());

    std::vector<std::uint32_t> adj(n, 0);
    std::vector<int> deg(n, 0);
    long long best = 0;

    std::function<void(int, int)> dfs = [&](int idx, int edges) {
        best = std::max(best, static_cast<long long>(edges));
        if (idx == m) return;
        if (edges + (m - idx) <= best) return; // cannot beat current best
        auto [u, v] = pairs[idx];
        // include pairs[idx]
        if (deg[u] < delta && deg[v] < delta) {
            adj[u] |= std::uint32_t{1} << v;
            adj[v] |= std::uint32_t{1} << u;
            ++deg[u], ++deg[v];
            if (mask_matching(adj, (std::uint32_t{1} << n) - 1) <= nu) dfs(idx + 1, edges + 1);
            adj[u] &= ~(std::uint32_t{1} << v);
            adj[v] &= ~(std::uint32_t{1} << u);
            --deg[u], --deg[v];
        }
        // exclude
        dfs(idx + 1, edges);
    };
    dfs(0, 0);
    return best;
}

int matching_number(const Graph& g) {
    std::vector<int> live;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) > 0) live.push_back(v);
    const int m = static_cast<int>(live.size());
    if (m == 0) return 0;
    if (m > 22)
        throw BudgetError("matching_number: " + std::to_string(m) +
                          " non-isolated vertices exceeds the DP budget of 22");

    std::vector<int> pos(g.order(), -1);
    for (int i = 0; i < m; ++i) pos[live[i]] = i;
    std::vector<std::uint32_t> adj(m, 0);
    for (int i = 0; i < m; ++i) {
        VertexSet nb = g.neighbors(live[i]);
        for (int v = nb.find_first(); v >= 0; v = nb.find_next(v))
            if (pos[v] >= 0) adj[i] |= std::uint32_t{1} << pos[v];
    }

    std::vector<std::int8_t> memo(std::size_t{1} << m, -1);
    std::function<int(std::uint32_t)> solve = [&](std::uint32_t mask) -> int {
        if (!mask) return 0;
        std::int8_t& slot = memo[mask];
        if (slot >= 0) return slot;
        int v = std::countr_zero(mask);
        std::uint32_t rest = mask & ~(std::uint32_t{1} << v);
        int best = solve(rest);
        std::uint32_t cand = adj[v] & rest;
        while (cand) {
            int u = std::countr_zero(cand);
            cand &= cand - 1;
            best = std::max(best, 1 + solve(rest & ~(std::uint32_t{1} << u)));
        }
        slot = static_cast<std::int8_t>(best);
        return best;
    };
    return solve((m == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << m) - 1));
}

std::vector<int> turan_part_sizes(int r, int n) {
    if (r < 1) throw ValidationError("Turan graph needs r >= 1");
    if (n < 0) throw ValidationError("Turan graph needs n >= 0");
    std::vector<int> parts(r, n / r);
    for (int i = 0; i < n % r; ++i) ++parts[i];
    return parts;
}

long long turan_edge_count(int r, long long n) {
    if (r < 1) throw ValidationError("Turan count needs r >= 1");
    if (n < 0) throw ValidationError("Turan count needs n >= 0");
    long long total = n * (n - 1) / 2;
    long long base = n / r, rem = n % r;
    total -= rem * ((base + 1) * base / 2);
    total -= (r - rem) * (base * (base - 1) / 2);
    return total;
}

long long h_edges(long long n, int p, int q) {
    if (p < 1 || q < 1) throw ValidationError("h(n,p,q) needs p >= 1 and q >= 1");
    if (n < q - 1) throw ValidationError("h(n,p,q) needs n >= q-1");
    long long w = q - 1;
    long long rest = n - w;
    return w * (w - 1) / 2 + w * rest + turan_edge_count(p, rest);
}

long long ex_formula(long long n, const StarForestSpec& spec) {
    return h_edges(n, spec.p, spec.q()) + f_formula(spec.k_min() - 1, spec.k_min() - 1);
}

PartitionLabeling::PartitionLabeling(int classes_, std::vector<int> assign_)
    : classes(classes_), assign(std::move(assign_)) {
    if (classes < 1) throw ValidationError("labeling needs at least one class");
    for (int c : assign)
        if (c < 0 || c >= classes) throw ValidationError("class index out of range");
}

std::vector<VertexSet> PartitionLabeling::class_sets() const {
    std::vector<VertexSet> sets(classes, VertexSet(static_cast<int>(assign.size())));
    for (std::size_t v = 0; v < assign.size(); ++v) sets[assign[v]].set(static_cast<int>(v));
    return sets;
}

namespace {

void require_total(const Graph& g, const PartitionLabeling& l) {
    if (static_cast<int>(l.assign.size()) != g.order())
        throw ValidationError("labeling does not cover the vertex set");
}

} // namespace

long long crossing_edges(const Graph& g, const PartitionLabeling& l) {
    require_total(g, l);
    long long cr = 0;
    for (auto [u, v] : g.edges())
        if (l.assign[u] != l.assign[v]) ++cr;
    return cr;
}

long long chen_gap(const Graph& g, const PartitionLabeling& l) {
    require_total(g, l);
    long long internal = g.size() - crossing_edges(g, l);
    std::vector<long long> sizes(l.classes, 0);
    for (int c : l.assign) ++sizes[c];
    long long cross_pairs = 0;
    for (int i = 0; i < l.classes; ++i)
        for (int j = i + 1; j < l.classes; ++j) cross_pairs += sizes[i] * sizes[j];
    long long missing = cross_pairs - crossing_edges(g, l);
    return internal - missing;
}

ChenHypotheses chen_hypotheses(const Graph& g, const PartitionLabeling& l, int k) {
    require_total(g, l);
    ChenHypotheses out;
    std::vector<VertexSet> sets = l.class_sets();
    std::vector<Graph> inner;
    inner.reserve(sets.size());
    std::vector<int> nu(sets.size(), 0);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        inner.push_back(induced_subgraph(g, sets[i]));
        nu[i] = matching_number(inner.back());
        out.max_internal_degree = std::max(out.max_internal_degree, max_degree(inner.back()));
    }
    for (std::size_t i = 0; i < sets.size(); ++i) {
        int sum = 0;
        for (std::size_t j = 0; j < sets.size(); ++j)
            if (j != i) sum += nu[j];
        out.max_other_matching_sum = std::max(out.max_other_matching_sum, sum);
    }
    for (int v = 0; v < g.order(); ++v) {
        VertexSet nb = g.neighbors(v);
        int ci = l.assign[v];
        int val = (nb & sets[ci]).count();
        for (int j = 0; j < l.classes; ++j) {
            if (j == ci) continue;
            VertexSet nbj = nb & sets[j];
            if (nbj.any()) val += matching_number(induced_subgraph(g, nbj));
        }
        out.max_pointwise = std::max(out.max_pointwise, val);
    }
    out.hold = out.max_internal_degree <= k - 1 && out.max_other_matching_sum <= k - 1 &&
               out.max_pointwise <= k - 1;
    return out;
}

namespace {

long long crossing_of_assignment(const std::vector<Edge>& edges, const std::vector<int>& a) {
    long long cr = 0;
    for (auto [u, v] : edges)
        if (a[u] != a[v]) ++cr;
    return cr;
}

} // namespace

CrossingPartitionResult max_crossing_partition(const Graph& g, int p, long long budget) {
    if (p < 1) throw ValidationError("partition needs p >= 1");
    const int n = g.order();
    const std::vector<Edge> edges = g.edges();

    double space = 1;
    for (int i = 0; i < n; ++i) space *= p;
    if (space <= static_cast<double>(budget)) {
        std::vector<int> a(n, 0), best_a(n, 0);
        long long best = crossing_of_assignment(edges, a);
        // odometer in lexicographic order; strict improvement keeps the least assignment
        while (true) {
            int i = n - 1;
            while (i >= 0 && a[i] == p - 1) a[i--] = 0;
            if (i < 0) break;
            ++a[i];
            long long cr = crossing_of_assignment(edges, a);
            if (cr > best) {
                best = cr;
                best_a = a;
            }
        }
        return {PartitionLabeling(p, best_a), best, true};
    }

    // Local search: single-vertex moves to the class gaining the most crossing
    // edges, with fixed-seed restarts. Not certified.
    std::mt19937_64 rng(0xC0FFEE);
    std::vector<int> best_a;
    long long best = -1;
    for (int restart = 0; restart < 8; ++restart) {
        std::vector<int> a(n);
        for (int v = 0; v < n; ++v)
            a[v] = restart == 0 ? v % p : static_cast<int>(rng() % p);
        bool improved = true;
        while (improved) {
            improved = false;
            for (int v = 0; v < n; ++v) {
                std::vector<long long> to_class(p, 0);
                VertexSet nb = g.neighbors(v);
                for (int u = nb.find_first(); u >= 0; u = nb.find_next(u)) ++to_class[a[u]];
                long long here = 0;
                for (int c = 0; c < p; ++c)
                    if (c != a[v]) here += to_class[c];
                for (int c = 0; c < p; ++c) {
                    if (c == a[v]) continue;
                    long long there = 0;
                    for (int d = 0; d < p; ++d)
                        if (d != c) there += to_class[d];
                    if (there > here) {
                        a[v] = c;
                        improved = true;
                        break;
                    }
                }
            }
        }
        long long cr = crossing_of_assignment(edges, a);
        if (cr > best) {
            best = cr;
            best_a = a;
        }
    }
    return {PartitionLabeling(p, best_a), best, false};
}

IntersectionBound intersection_bound(const std::vector<VertexSet>& sets) {
    IntersectionBound out;
    if (sets.empty()) return out;
    for (const auto& s : sets)
        if (s.universe() != sets[0].universe())
            throw ValidationError("intersection_bound: sets must share one universe");
    VertexSet inter = sets[0], uni = sets[0];
    long long sum = 0;
    for (const auto& s : sets) {
        sum += s.count();
        inter &= s;
        uni |= s;
    }
    out.lhs = inter.count();
    out.rhs = sum - static_cast<long long>(sets.size() - 1) * uni.count();
    out.holds = out.lhs >= out.rhs;
    return out;
}

bool intersection_bound_holds(const std::vector<VertexSet>& sets) {
    return intersection_bound(sets).holds;
}

} // namespace exlab
