#include "exlab/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <thread>

#include "exlab/constructions.hpp"
#include "exlab/errors.hpp"
#include "exlab/freeness.hpp"

namespace exlab {

namespace {

struct Scratch {
    int n = 0;
    int stride = 0;
    long long edges = 0;
    std::vector<std::uint64_t> rows;

    explicit Scratch(int n_) : n(n_), stride(n_ == 0 ? 0 : (n_ + 63) / 64) {
        rows.assign(static_cast<std::size_t>(n) * stride, 0);
    }
    AdjView view() const { return {n, stride, rows.data()}; }
    void add(int u, int v) {
        rows[static_cast<std::size_t>(u) * stride + (v >> 6)] |= std::uint64_t{1} << (v & 63);
        rows[static_cast<std::size_t>(v) * stride + (u >> 6)] |= std::uint64_t{1} << (u & 63);
        ++edges;
    }
    void remove(int u, int v) {
        rows[static_cast<std::size_t>(u) * stride + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
        rows[static_cast<std::size_t>(v) * stride + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
        --edges;
    }
    Graph to_graph() const { return Graph::from_rows(n, rows, edges); }
};

std::vector<Edge> all_pairs(int n) {
    std::vector<Edge> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return pairs;
}

// leaf(scratch); prune(current_edges, undecided) may cut a whole subtree.
void dfs_edges(Scratch& s, StarForestSearcher& se, const std::vector<Edge>& pairs,
               std::size_t idx, const std::function<bool(long long, long long)>& prune,
               const std::function<void(const Scratch&)>& leaf, long long& count) {
    if (prune && prune(s.edges, static_cast<long long>(pairs.size() - idx))) return;
    if (idx == pairs.size()) {
        ++count;
        leaf(s);
        return;
    }
    auto [u, v] = pairs[idx];
    s.add(u, v);
    bool blocked = se.contains_via_edge(u, v);
    if (!blocked) dfs_edges(s, se, pairs, idx + 1, prune, leaf, count);
    s.remove(u, v);
    dfs_edges(s, se, pairs, idx + 1, prune, leaf, count);
}

int resolve_threads(const SearchOptions& opts) {
    if (opts.threads > 0) return opts.threads;
    unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::min(8u, std::max(1u, hw)));
}

// Runs the edge DFS, sharded by the first `shard_bits` edge decisions when
// several workers are available. make_leaf(shard) returns the per-shard leaf
// callback; shards run in parallel and are merged by the caller in index order.
long long sharded_enumerate(int n, const StarForestSpec& spec, const SearchOptions& opts,
                            const std::function<bool(long long, long long)>& prune,
                            const std::function<std::function<void(const Scratch&)>(int)>& make_leaf) {
    if (n < 0) throw ValidationError("enumeration needs n >= 0");
    if (n > opts.max_n)
        throw BudgetError("enumeration budget exceeded: n = " + std::to_string(n) +
                          " > max_n = " + std::to_string(opts.max_n));
    const std::vector<Edge> pairs = all_pairs(n);
    const int threads = resolve_threads(opts);
    const int prefix_len = static_cast<int>(std::min<std::size_t>(
        static_cast<std::size_t>(std::clamp(opts.shard_bits, 0, 12)), pairs.size()));

    if (threads <= 1 || prefix_len == 0 || n < 6) {
        Scratch s(n);
        StarForestSearcher se(spec);
        se.bind(s.view());
        long long count = 0;
        dfs_edges(s, se, pairs, 0, prune, make_leaf(0), count);
        return count;
    }

    // Expand all free prefixes of the first prefix_len edges.
    struct Prefix {
        std::vector<std::uint64_t> rows;
        long long edges;
    };
    std::vector<Prefix> prefixes;
    {
        Scratch s(n);
        StarForestSearcher se(spec);
        se.bind(s.view());
        std::function<void(std::size_t)> expand = [&](std::size_t idx) {
            if (idx == static_cast<std::size_t>(prefix_len)) {
                prefixes.push_back({s.rows, s.edges});
                return;
            }
            auto [u, v] = pairs[idx];
            s.add(u, v);
            if (!se.contains_via_edge(u, v)) expand(idx + 1);
            s.remove(u, v);
            expand(idx + 1);
        };
        expand(0);
    }

    std::atomic<std::size_t> next{0};
    std::vector<long long> counts(prefixes.size(), 0);
    std::vector<std::function<void(const Scratch&)>> leaves;
    leaves.reserve(prefixes.size());
    for (std::size_t i = 0; i < prefixes.size(); ++i) leaves.push_back(make_leaf(static_cast<int>(i)));

    auto worker = [&]() {
        Scratch s(n);
        StarForestSearcher se(spec);
        se.bind(s.view());
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= prefixes.size()) break;
            s.rows = prefixes[i].rows;
            s.edges = prefixes[i].edges;
            se.bind(s.view()); // rows storage may have been reallocated by assignment
            dfs_edges(s, se, pairs, static_cast<std::size_t>(prefix_len), prune, leaves[i], counts[i]);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    long long total = 0;
    for (long long c : counts) total += c;
    return total;
}

bool is_edge_maximal(Scratch& s, StarForestSearcher& se) {
    for (int u = 0; u < s.n; ++u)
        for (int v = u + 1; v < s.n; ++v) {
            if (s.view().has_edge(u, v)) continue;
            s.add(u, v);
            bool creates = se.contains_via_edge(u, v);
            s.remove(u, v);
            if (!creates) return false;
        }
    return true;
}

std::vector<Graph> dedup_canonical(const std::vector<Graph>& graphs) {
    std::map<CanonicalForm, Graph> by_form;
    for (const auto& g : graphs) by_form.emplace(canonical_form(g), g);
    std::vector<Graph> out;
    out.reserve(by_form.size());
    for (auto& [form, g] : by_form) out.push_back(g);
    return out;
}

} // namespace

long long enumerate_free(int n, const StarForestSpec& spec,
                         const std::function<void(const AdjView&, long long)>& visit,
                         const SearchOptions& opts) {
    return sharded_enumerate(n, spec, opts, nullptr, [&](int) {
        return std::function<void(const Scratch&)>([&](const Scratch& s) {
            if (visit) visit(s.view(), s.edges);
        });
    });
}

TuranResult turan_number_bruteforce(int n, const StarForestSpec& spec, const SearchOptions& opts) {
    std::atomic<long long> best{0};
    std::mutex mu;
    std::vector<std::vector<Graph>> found(1 << 12);

    auto prune = [&](long long edges, long long undecided) {
        return edges + undecided < best.load(std::memory_order_relaxed);
    };
    auto make_leaf = [&](int shard) {
        return std::function<void(const Scratch&)>([&, shard](const Scratch& s) {
            long long cur = best.load(std::memory_order_relaxed);
            if (s.edges < cur) return;
            while (s.edges > cur &&
                   !best.compare_exchange_weak(cur, s.edges, std::memory_order_relaxed)) {
            }
            std::lock_guard<std::mutex> lock(mu);
            found[shard].push_back(s.to_graph());
        });
    };
    TuranResult out;
    out.visited = sharded_enumerate(n, spec, opts, prune, make_leaf);
    out.warned = n >= 9;
    out.ex = best.load();

    std::vector<Graph> max_graphs;
    for (const auto& shard : found)
        for (const auto& g : shard)
            if (g.size() == out.ex) max_graphs.push_back(g);
    out.extremal = dedup_canonical(max_graphs);
    return out;
}

SpectralExtremalResult spectral_extremal_bruteforce(int n, const StarForestSpec& spec,
                                                    const SearchOptions& opts) {
    struct Candidate {
        double rho;
        Graph g;
    };
    std::mutex mu;
    std::vector<std::vector<Candidate>> found(1 << 12);
    std::atomic<long long> scored{0};

    auto make_leaf = [&](int shard) {
        auto searcher = std::make_shared<StarForestSearcher>(spec);
        return std::function<void(const Scratch&)>([&, shard, searcher](const Scratch& s) {
            Scratch& mutable_s = const_cast<Scratch&>(s);
            searcher->bind(s.view());
            if (!is_edge_maximal(mutable_s, *searcher)) return;
            scored.fetch_add(1, std::memory_order_relaxed);
            double rho = spectral_radius(s.view(), opts.tol).rho;
            std::lock_guard<std::mutex> lock(mu);
            auto& list = found[shard];
            if (!list.empty() && rho < list.front().rho - opts.tie_tol) return;
            list.push_back({rho, s.to_graph()});
            if (rho > list.front().rho) std::swap(list.front(), list.back());
        });
    };
    SpectralExtremalResult out;
    out.warned = n >= 9;
    sharded_enumerate(n, spec, opts, nullptr, make_leaf);
    out.scored = scored.load();

    double rho_max = 0.0;
    for (const auto& shard : found)
        for (const auto& c : shard) rho_max = std::max(rho_max, c.rho);
    std::vector<Graph> winners;
    for (const auto& shard : found)
        for (const auto& c : shard)
            if (c.rho >= rho_max - opts.tie_tol) winners.push_back(c.g);
    out.rho_max = rho_max;
    out.extremal = dedup_canonical(winners);
    if (!out.extremal.empty()) {
        out.best = spectral_radius(out.extremal.front(), opts.tol);
        out.rho_max = out.best.rho;
    }
    return out;
}

CanonicalForm canonical_form(const Graph& g) {
    const int n = g.order();
    if (n > 10) throw BudgetError("canonical_form budget is n <= 10");
    CanonicalForm best;
    best.n = n;
    const int nbits = n * (n - 1) / 2;
    const int nwords = (nbits + 63) / 64;
    best.bits.assign(std::max(nwords, 1), ~std::uint64_t{0});
    if (n == 0) {
        best.bits.assign(1, 0);
        return best;
    }

    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    // Position i accepts only vertices of required_deg[i] (degrees descending).
    std::vector<int> required_deg = deg;
    std::sort(required_deg.begin(), required_deg.end(), std::greater<int>());

    std::vector<std::uint64_t> cur(static_cast<std::size_t>(nwords), 0);
    std::vector<int> perm(n, -1); // position -> original vertex
    std::vector<bool> taken(n, false);
    bool have_best = false;

    // cmp: -1 current prefix smaller than best at some ancestor, 0 equal so far.
    // Segment comparisons only prune (cmp > 0); the leaf does a full compare
    // because best may have been replaced by a sibling sharing this prefix.
    std::function<void(int, int)> place = [&](int pos, int cmp) {
        if (pos == n) {
            if (!have_best || cur < best.bits) {
                best.bits = cur;
                have_best = true;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (taken[v] || deg[v] != required_deg[pos]) continue;
            // Fill bits for pairs (j, pos), j < pos, in column order.
            int base = pos * (pos - 1) / 2;
            for (int j = 0; j < pos; ++j) {
                int t = base + j;
                std::uint64_t bit = std::uint64_t{1} << (63 - (t & 63));
                if (g.has_edge(perm[j], v))
                    cur[t >> 6] |= bit;
                else
                    cur[t >> 6] &= ~bit;
            }
            int ncmp = cmp;
            if (ncmp == 0 && pos > 0) {
                // Compare the freshly decided bit range against best.
                int lo = base, hi = base + pos - 1;
                for (int w = lo >> 6; w <= hi >> 6 && ncmp == 0; ++w) {
                    std::uint64_t mask = ~std::uint64_t{0};
                    if (w == (lo >> 6)) mask &= ~std::uint64_t{0} >> (lo & 63);
                    if (w == (hi >> 6) && ((hi & 63) != 63))
                        mask &= ~std::uint64_t{0} << (63 - (hi & 63));
                    std::uint64_t a = cur[w] & mask, b = best.bits[w] & mask;
                    if (a < b) ncmp = -1;
                    else if (a > b) ncmp = 1;
                }
            }
            if (ncmp > 0) continue;
            perm[pos] = v;
            taken[v] = true;
            place(pos + 1, ncmp);
            taken[v] = false;
        }
    };
    place(0, 0);
    return best;
}

bool isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    return canonical_form(g) == canonical_form(h);
}

namespace {

ConstructionDiagnostics construction_diagnostics(int n, const StarForestSpec& spec) {
    ConstructionDiagnostics out;
    out.feasible = extremal_family_feasible(n, spec);
    if (!out.feasible) return out;
    ExtremalFamilyMember member = extremal_family_layout(n, spec);
    out.edges = member.graph.size();
    out.is_spec_free = is_free(member.graph, spec);
    for (const auto& c : member.classes) out.part_sizes.push_back(c.count());

    // The crossing-edge diagnostic applies to the graph without the dominating
    // clique, partitioned by the remaining classes.
    VertexSet rest = VertexSet::full(n);
    rest.subtract(member.clique);
    Graph inner = induced_subgraph(member.graph, rest);
    const int w = member.clique.count();
    std::vector<int> assign(inner.order(), 0);
    for (std::size_t i = 0; i < member.classes.size(); ++i)
        for (int v = member.classes[i].find_first(); v >= 0; v = member.classes[i].find_next(v))
            assign[v - w] = static_cast<int>(i);
    PartitionLabeling labeling(spec.p, assign);
    out.chen_gap_value = chen_gap(inner, labeling);
    out.chen_hypotheses_hold = chen_hypotheses(inner, labeling, spec.k_min()).hold;
    return out;
}

} // namespace

VerificationReport verify_theorem(int n, const StarForestSpec& spec, const SearchOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport r;
    r.n = n;
    r.spec = spec;

    TuranResult turan = turan_number_bruteforce(n, spec, opts);
    r.ex_brute = turan.ex;
    r.extremal = turan.extremal;
    r.visited = turan.visited;
    r.warned = turan.warned;
    r.ex_formula_value = ex_formula(n, spec);
    r.formula_matches = r.ex_brute == r.ex_formula_value;

    SpectralExtremalResult sp = spectral_extremal_bruteforce(n, spec, opts);
    r.rho_max = sp.rho_max;
    r.rho_residual = sp.best.residual;
    r.rho_certified_lower = sp.best.certified_lower;
    r.spectral_extremal = sp.extremal;
    r.rho_minus_linear = r.rho_max - static_cast<double>(spec.p - 1) / spec.p * n;

    std::vector<CanonicalForm> ex_forms;
    for (const auto& g : r.extremal) ex_forms.push_back(canonical_form(g));
    r.containment_holds = !r.spectral_extremal.empty();
    for (const auto& g : r.spectral_extremal) {
        CanonicalForm f = canonical_form(g);
        bool present = std::find(ex_forms.begin(), ex_forms.end(), f) != ex_forms.end();
        r.containment_holds = r.containment_holds && present;
    }

    r.construction = construction_diagnostics(n, spec);
    for (const auto& g : r.spectral_extremal) {
        PartitionDiagnostics d;
        CrossingPartitionResult cut = max_crossing_partition(g, spec.p);
        d.crossing = cut.crossing;
        d.chen_gap_value = chen_gap(g, cut.labeling);
        std::vector<int> sizes(spec.p, 0);
        for (int c : cut.labeling.assign) ++sizes[c];
        std::sort(sizes.begin(), sizes.end(), std::greater<int>());
        d.part_sizes = sizes;
        r.exsp_diagnostics.push_back(d);
    }

    r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    return r;
}

namespace {

std::uint64_t rng_below(std::uint64_t& state, std::uint64_t n) {
    // splitmix64 step; bias is irrelevant at these ranges
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z % n;
}

} // namespace

HillClimbResult hill_climb(int n, const StarForestSpec& spec, long long steps,
                           std::uint64_t seed, const SearchOptions& opts) {
    if (n < 1) throw ValidationError("hill_climb needs n >= 1");
    Scratch s(n);
    StarForestSearcher se(spec);
    se.bind(s.view());
    std::uint64_t state = seed * 0x9E3779B97F4A7C15ull + 0xD1B54A32D192ED03ull;

    if (extremal_family_feasible(n, spec)) {
        Graph start = extremal_family_member(n, spec);
        for (auto [u, v] : start.edges()) s.add(u, v);
    } else {
        // Random maximal free graph: insert a shuffled pair list greedily.
        std::vector<Edge> pairs = all_pairs(n);
        for (std::size_t i = pairs.size(); i > 1; --i)
            std::swap(pairs[i - 1], pairs[rng_below(state, i)]);
        for (auto [u, v] : pairs) {
            s.add(u, v);
            if (se.contains_via_edge(u, v)) s.remove(u, v);
        }
    }

    HillClimbResult out;
    double rho = spectral_radius(s.view(), opts.tol).rho;
    std::vector<Edge> pairs = all_pairs(n);
    for (long long step = 0; step < steps; ++step) {
        bool try_swap = s.edges > 0 && rng_below(state, 2) == 1;
        if (!try_swap) {
            auto [u, v] = pairs[rng_below(state, pairs.size())];
            if (s.view().has_edge(u, v)) continue;
            s.add(u, v);
            if (se.contains_via_edge(u, v)) {
                s.remove(u, v);
                continue;
            }
            rho = spectral_radius(s.view(), opts.tol).rho;
            ++out.accepted_adds;
        } else {
            std::vector<Edge> edges;
            for (auto [u, v] : pairs)
                if (s.view().has_edge(u, v)) edges.emplace_back(u, v);
            Edge rm = edges[rng_below(state, edges.size())];
            Edge add = pairs[rng_below(state, pairs.size())];
            if (add == rm || s.view().has_edge(add.first, add.second)) continue;
            s.remove(rm.first, rm.second);
            s.add(add.first, add.second);
            bool ok = !se.contains_via_edge(add.first, add.second);
            double new_rho = ok ? spectral_radius(s.view(), opts.tol).rho : 0.0;
            if (ok && new_rho > rho + opts.tie_tol) {
                rho = new_rho;
                ++out.accepted_swaps;
            } else {
                s.remove(add.first, add.second);
                s.add(rm.first, rm.second);
            }
        }
    }
    out.best = s.to_graph();
    out.rho = rho;
    return out;
}

} // namespace exlab
