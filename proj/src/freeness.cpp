#include "exlab/freeness.hpp"

#include <algorithm>
#include <cstring>
#include <functional>

#include "exlab/errors.hpp"

namespace exlab {

namespace {

inline bool word_test(const std::uint64_t* w, int i) { return (w[i >> 6] >> (i & 63)) & 1u; }
inline void word_set(std::uint64_t* w, int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
inline void word_clear(std::uint64_t* w, int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

inline int word_count(const std::uint64_t* w, int stride) {
    int c = 0;
    for (int i = 0; i < stride; ++i) c += std::popcount(w[i]);
    return c;
}

inline int and_count(const std::uint64_t* a, const std::uint64_t* b, int stride) {
    int c = 0;
    for (int i = 0; i < stride; ++i) c += std::popcount(a[i] & b[i]);
    return c;
}

template <typename F>
inline void for_each_bit(const std::uint64_t* w, int stride, F f) {
    for (int i = 0; i < stride; ++i) {
        std::uint64_t bits = w[i];
        while (bits) {
            int b = std::countr_zero(bits);
            bits &= bits - 1;
            f((i << 6) + b);
        }
    }
}

} // namespace

StarForestSearcher::StarForestSearcher(const StarForestSpec& spec) : spec_(spec) {}

void StarForestSearcher::bind(const AdjView& g) {
    g_ = g;
    stride_ = g.stride;
    used_.assign(stride_, 0);
}

std::uint64_t* StarForestSearcher::buffer(int depth) {
    while (static_cast<int>(pool_.size()) <= depth) pool_.emplace_back(stride_, 0);
    if (static_cast<int>(pool_[depth].size()) < stride_) pool_[depth].assign(stride_, 0);
    return pool_[depth].data();
}

int StarForestSearcher::count_at_least(const std::uint64_t* words, int from) const {
    int c = 0;
    int w0 = from >> 6;
    for (int i = w0; i < stride_; ++i) {
        std::uint64_t bits = words[i];
        if (i == w0) bits &= ~std::uint64_t{0} << (from & 63);
        c += std::popcount(bits);
    }
    return c;
}

// Can stars_[idx..] still be embedded, with `banned_center` additionally
// unavailable? Used to discard a center before its packings are enumerated:
// any full embedding through that center keeps all of these vertices free.
bool StarForestSearcher::rest_feasible(int idx, int banned_center) {
    if (idx >= static_cast<int>(stars_.size())) return true;
    word_set(used_.data(), banned_center);
    bool record = record_;
    record_ = false;
    bool ok = search(idx, 0);
    record_ = record;
    word_clear(used_.data(), banned_center);
    return ok;
}

bool StarForestSearcher::search(int idx, int min_center) {
    const int q = static_cast<int>(stars_.size());
    if (idx == q) return true;
    const int k = stars_[idx];
    const int need = spec_.p * k;
    std::uint64_t* avail = buffer(depth_++);
    for (int c = min_center; c < g_.n; ++c) {
        if (word_test(used_.data(), c)) continue;
        for (int w = 0; w < stride_; ++w) avail[w] = g_.row(c)[w] & ~used_[w];
        word_clear(avail, c);
        if (word_count(avail, stride_) < need) continue;
        if (idx + 1 < q && !rest_feasible(idx + 1, c)) continue;
        word_set(used_.data(), c);
        centers_[idx] = c;
        bool ok = pack(c, idx, k, avail);
        word_clear(used_.data(), c);
        if (ok) {
            --depth_;
            return true;
        }
    }
    --depth_;
    return false;
}

bool StarForestSearcher::pack(int center, int star, int remaining, const std::uint64_t* avail) {
    if (remaining == 0) {
        const int q = static_cast<int>(stars_.size());
        int next = star < 0 ? 0 : star + 1;
        // Equal stars are interchangeable; force increasing center labels.
        int min_center = 0;
        if (star >= 0 && next < q && stars_[next] == stars_[star]) min_center = centers_[star] + 1;
        return search(next, min_center);
    }
    if (word_count(avail, stride_) < spec_.p * remaining) return false;

    // Fail-first pivot: the available vertex with the fewest available neighbors.
    int anchor = -1, anchor_deg = 0;
    for (int w = 0; w < stride_; ++w) {
        std::uint64_t bits = avail[w];
        while (bits) {
            int b = std::countr_zero(bits);
            bits &= bits - 1;
            int v = (w << 6) + b;
            int d = and_count(g_.row(v), avail, stride_);
            if (anchor < 0 || d < anchor_deg) {
                anchor = v;
                anchor_deg = d;
            }
        }
    }

    // Branch A: some clique of this star contains the anchor.
    if (anchor_deg >= spec_.p - 1) {
        std::uint64_t* cand = buffer(depth_++);
        for (int w = 0; w < stride_; ++w) cand[w] = g_.row(anchor)[w] & avail[w];
        int begin = static_cast<int>(clique_scratch_.size());
        clique_scratch_.push_back(anchor);
        std::uint64_t* rest = buffer(depth_++);
        std::memcpy(rest, avail, sizeof(std::uint64_t) * stride_);
        word_clear(rest, anchor);
        bool ok = extend_clique(center, star, remaining, cand, 0, spec_.p - 1, rest, begin);
        depth_ -= 2;
        clique_scratch_.pop_back();
        if (ok) return true;
    }

    // Branch B: the anchor is not used by this star at all.
    std::uint64_t* rest = buffer(depth_++);
    std::memcpy(rest, avail, sizeof(std::uint64_t) * stride_);
    word_clear(rest, anchor);
    bool ok = pack(center, star, remaining, rest);
    --depth_;
    return ok;
}

bool StarForestSearcher::extend_clique(int center, int star, int remaining,
                                       const std::uint64_t* cand, int min_v, int need,
                                       const std::uint64_t* avail, int clique_begin) {
    if (need == 0) {
        // clique_scratch_[clique_begin..) holds one complete p-set.
        const int end = static_cast<int>(clique_scratch_.size());
        for (int i = clique_begin; i < end; ++i) word_set(used_.data(), clique_scratch_[i]);
        std::uint64_t* rest = buffer(depth_++);
        std::memcpy(rest, avail, sizeof(std::uint64_t) * stride_);
        for (int i = clique_begin; i < end; ++i) word_clear(rest, clique_scratch_[i]);
        if (record_ && star >= 0)
            cliques_[star].emplace_back(clique_scratch_.begin() + clique_begin,
                                        clique_scratch_.end());
        bool ok = pack(center, star, remaining - 1, rest);
        --depth_;
        if (record_ && star >= 0 && !ok) cliques_[star].pop_back();
        for (int i = clique_begin; i < end; ++i) word_clear(used_.data(), clique_scratch_[i]);
        return ok;
    }
    if (count_at_least(cand, min_v) < need) return false;
    std::uint64_t* sub = buffer(depth_++);
    for (int w = min_v >> 6; w < stride_; ++w) {
        std::uint64_t bits = cand[w];
        if (w == (min_v >> 6)) bits &= ~std::uint64_t{0} << (min_v & 63);
        while (bits) {
            int b = std::countr_zero(bits);
            bits &= bits - 1;
            int v = (w << 6) + b;
            for (int i = 0; i < stride_; ++i) sub[i] = cand[i] & g_.row(v)[i];
            clique_scratch_.push_back(v);
            bool ok = extend_clique(center, star, remaining, sub, v + 1, need - 1, avail,
                                    clique_begin);
            clique_scratch_.pop_back();
            if (ok) {
                --depth_;
                return true;
            }
        }
    }
    --depth_;
    return false;
}

bool StarForestSearcher::find(Witness* out) {
    stars_ = spec_.ks;
    record_ = out != nullptr;
    centers_.assign(stars_.size(), -1);
    cliques_.assign(stars_.size(), {});
    clique_scratch_.clear();
    std::fill(used_.begin(), used_.end(), 0);
    depth_ = 0;
    bool ok = search(0, 0);
    if (ok && out) {
        out->centers = centers_;
        out->cliques = cliques_;
    }
    record_ = false;
    return ok;
}

bool StarForestSearcher::contains_via_edge(int u, int v) {
    record_ = false;
    clique_scratch_.clear();
    std::fill(used_.begin(), used_.end(), 0);
    depth_ = 0;

    int prev_k = -1;
    for (std::size_t i = 0; i < spec_.ks.size(); ++i) {
        const int k = spec_.ks[i];
        if (k == prev_k) continue; // equal stars are interchangeable
        prev_k = k;
        stars_ = spec_.ks;
        stars_.erase(stars_.begin() + static_cast<long>(i));
        centers_.assign(stars_.size(), -1);

        // The copy's clique through uv is centered at u, at v, or (p >= 2) at
        // a common neighbor with u and v among the p fresh vertices.
        for (int pass = 0; pass < 3; ++pass) {
            if (pass == 2 && spec_.p < 2) break;
            std::vector<int> cs;
            if (pass == 0)
                cs = {u};
            else if (pass == 1)
                cs = {v};
            else {
                std::uint64_t* common = buffer(depth_++);
                for (int w = 0; w < stride_; ++w) common[w] = g_.row(u)[w] & g_.row(v)[w];
                for_each_bit(common, stride_, [&](int c) { cs.push_back(c); });
                --depth_;
            }
            for (int c : cs) {
                std::uint64_t* avail = buffer(depth_++);
                for (int w = 0; w < stride_; ++w) avail[w] = g_.row(c)[w] & ~used_[w];
                word_clear(avail, c);
                if (word_count(avail, stride_) < spec_.p * k) {
                    --depth_;
                    continue;
                }
                word_set(used_.data(), c);
                // Seed the first clique with the forced edge's endpoints.
                clique_scratch_.clear();
                std::uint64_t* cand = buffer(depth_++);
                std::memcpy(cand, avail, sizeof(std::uint64_t) * stride_);
                int seeded = 0;
                for (int s : {u, v}) {
                    if (s == c) continue;
                    clique_scratch_.push_back(s);
                    for (int w = 0; w < stride_; ++w) cand[w] &= g_.row(s)[w];
                    ++seeded;
                }
                std::uint64_t* rest = buffer(depth_++);
                std::memcpy(rest, avail, sizeof(std::uint64_t) * stride_);
                for (int s : clique_scratch_) word_clear(rest, s);
                bool ok = extend_clique(c, -1, k, cand, 0, spec_.p - seeded, rest, 0);
                depth_ -= 2;
                word_clear(used_.data(), c);
                clique_scratch_.clear();
                --depth_;
                if (ok) return true;
            }
        }
    }
    return false;
}

std::optional<Witness> find_blowup_star_forest(const Graph& g, const StarForestSpec& spec) {
    StarForestSearcher searcher(spec);
    searcher.bind(g.view());
    Witness w;
    if (!searcher.find(&w)) return std::nullopt;
    if (!witness_valid(g, spec, w))
        throw VerificationError("searcher produced an invalid witness");
    return w;
}

bool is_free(const AdjView& g, const StarForestSpec& spec) {
    StarForestSearcher searcher(spec);
    searcher.bind(g);
    return !searcher.find(nullptr);
}

bool is_free(const Graph& g, const StarForestSpec& spec) {
    return !find_blowup_star_forest(g, spec).has_value();
}

bool witness_valid(const Graph& g, const StarForestSpec& spec, const Witness& w) {
    const int q = spec.q();
    if (static_cast<int>(w.centers.size()) != q || static_cast<int>(w.cliques.size()) != q)
        return false;
    std::vector<bool> seen(g.order(), false);
    auto claim = [&](int v) {
        if (v < 0 || v >= g.order() || seen[v]) return false;
        seen[v] = true;
        return true;
    };
    for (int i = 0; i < q; ++i) {
        if (!claim(w.centers[i])) return false;
        if (static_cast<int>(w.cliques[i].size()) != spec.ks[i]) return false;
        for (const auto& pset : w.cliques[i]) {
            if (static_cast<int>(pset.size()) != spec.p) return false;
            for (int v : pset) {
                if (!claim(v)) return false;
                if (!g.has_edge(w.centers[i], v)) return false;
            }
            for (std::size_t a = 0; a < pset.size(); ++a)
                for (std::size_t b = a + 1; b < pset.size(); ++b)
                    if (!g.has_edge(pset[a], pset[b])) return false;
        }
    }
    return true;
}

bool generic_contains(const Graph& host, const Graph& pattern) {
    const int np = pattern.order();
    if (np == 0) return true;
    if (np > 12) throw BudgetError("generic_contains: pattern larger than 12 vertices");
    if (np > host.order()) return false;

    // Order pattern vertices: most constrained first, preferring vertices
    // adjacent to already-ordered ones.
    std::vector<int> order;
    std::vector<bool> placed(np, false);
    for (int step = 0; step < np; ++step) {
        int best = -1, best_links = -1, best_deg = -1;
        for (int v = 0; v < np; ++v) {
            if (placed[v]) continue;
            int links = 0;
            for (int u : order)
                if (pattern.has_edge(u, v)) ++links;
            int deg = pattern.degree(v);
            if (links > best_links || (links == best_links && deg > best_deg)) {
                best = v;
                best_links = links;
                best_deg = deg;
            }
        }
        order.push_back(best);
        placed[best] = true;
    }

    std::vector<int> image(np, -1);
    std::vector<bool> used(host.order(), false);
    std::function<bool(int)> go = [&](int step) -> bool {
        if (step == np) return true;
        int pv = order[step];
        for (int hv = 0; hv < host.order(); ++hv) {
            if (used[hv] || host.degree(hv) < pattern.degree(pv)) continue;
            bool ok = true;
            for (int prev = 0; prev < step && ok; ++prev) {
                int pu = order[prev];
                if (pattern.has_edge(pu, pv) && !host.has_edge(image[pu], hv)) ok = false;
            }
            if (!ok) continue;
            image[pv] = hv;
            used[hv] = true;
            if (go(step + 1)) return true;
            used[hv] = false;
            image[pv] = -1;
        }
        return false;
    };
    return go(0);
}

} // namespace exlab
