#ifndef EXLAB_STAR_FOREST_HPP
#define EXLAB_STAR_FOREST_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "exlab/errors.hpp"

namespace exlab {

// Parameters of the forbidden pattern: the edge blow-up (clique order p+1)
// of the star forest with star sizes ks. ks is kept sorted non-increasing.
struct StarForestSpec {
    int p = 2;
    std::vector<int> ks;

    StarForestSpec() = default;
    StarForestSpec(int p_, std::vector<int> ks_) : p(p_), ks(std::move(ks_)) {
        if (p < 1) throw ValidationError("blow-up parameter p must be >= 1");
        if (ks.empty()) throw ValidationError("star list must be non-empty");
        for (int k : ks)
            if (k < 1) throw ValidationError("star sizes must be >= 1");
        std::sort(ks.begin(), ks.end(), std::greater<int>());
    }

    int q() const { return static_cast<int>(ks.size()); }
    int k_min() const { return ks.back(); }
    int k_sum() const { return std::accumulate(ks.begin(), ks.end(), 0); }
    // Vertices of the blown-up pattern: q centers plus p per blown edge.
    int pattern_order() const { return q() + p * k_sum(); }

    std::string to_string() const {
        std::string s = "S^" + std::to_string(p + 1) + "_(";
        for (std::size_t i = 0; i < ks.size(); ++i)
            s += (i ? "," : "") + std::to_string(ks[i]);
        return s + ")";
    }

    bool operator==(const StarForestSpec&) const = default;
};

} // namespace exlab

#endif
