#ifndef EXLAB_BITSET_HPP
#define EXLAB_BITSET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace exlab {

// Fixed-universe dynamic bitset. Vertex sets and adjacency rows both use this
// layout so neighborhood intersections are plain word ANDs.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int universe) : size_(universe), w_((universe + 63) / 64, 0) {}

    static Bitset full(int universe) {
        Bitset b(universe);
        for (int i = 0; i < universe; ++i) b.set(i);
        return b;
    }

    int universe() const { return size_; }
    int words() const { return static_cast<int>(w_.size()); }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    // this \ o
    Bitset& subtract(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool is_subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    // -1 when exhausted.
    int find_first() const { return find_next(-1); }
    int find_next(int i) const {
        for (int k = i + 1; k < size_;) {
            std::uint64_t w = w_[k >> 6] >> (k & 63);
            if (w) return k + std::countr_zero(w);
            k = ((k >> 6) + 1) << 6;
        }
        return -1;
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        for (int i = find_first(); i >= 0; i = find_next(i)) v.push_back(i);
        return v;
    }

    const std::uint64_t* data() const { return w_.data(); }
    std::uint64_t* data() { return w_.data(); }

    bool operator==(const Bitset&) const = default;

private:
    int size_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace exlab

#endif
