#include "exlab/graph6.hpp"

#include <string>

#include "exlab/errors.hpp"

namespace exlab {

namespace {
constexpr int kBias = 63;
constexpr long long kMaxOrder = (1LL << 36) - 1;
} // namespace

std::string encode_graph6(const Graph& g) {
    const long long n = g.order();
    if (n > kMaxOrder) throw ValidationError("graph6 supports at most 2^36-1 vertices");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kBias));
    return out;
}

Graph decode_graph6(std::string_view s) {
    if (s.empty()) throw ValidationError("graph6: empty input");
    for (char c : s)
        if (c < kBias || c > 126) throw ValidationError("graph6: byte out of printable range");

    std::size_t pos = 0;
    long long n;
    if (s[0] != 126) {
        n = s[0] - kBias;
        pos = 1;
    } else if (s.size() >= 2 && s[1] != 126) {
        if (s.size() < 4) throw ValidationError("graph6: truncated order field");
        n = 0;
        for (int i = 1; i <= 3; ++i) n = (n << 6) | (s[i] - kBias);
        pos = 4;
        if (n <= 62) throw ValidationError("graph6: non-canonical order encoding");
    } else {
        if (s.size() < 8) throw ValidationError("graph6: truncated order field");
        n = 0;
        for (int i = 2; i <= 7; ++i) n = (n << 6) | (s[i] - kBias);
        pos = 8;
        if (n <= 258047) throw ValidationError("graph6: non-canonical order encoding");
    }

    long long nbits = n * (n - 1) / 2;
    long long expect = (nbits + 5) / 6;
    if (static_cast<long long>(s.size() - pos) != expect)
        throw ValidationError("graph6: body length mismatch");

    std::vector<Edge> edges;
    long long bit = 0;
    int u = 0, v = 1; // column-order walk over the upper triangle
    for (std::size_t i = pos; i < s.size(); ++i) {
        int byte = s[i] - kBias;
        for (int b = 5; b >= 0; --b, ++bit) {
            int val = (byte >> b) & 1;
            if (bit >= nbits) {
                if (val) throw ValidationError("graph6: nonzero padding bits");
                continue;
            }
            if (val) edges.emplace_back(u, v);
            if (++u == v) {
                u = 0;
                ++v;
            }
        }
    }
    return Graph(static_cast<int>(n), edges);
}

} // namespace exlab
