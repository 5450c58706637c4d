#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "graph.hpp"

namespace plab {

// Exact isomorphism invariant: order plus the packed upper-triangular adjacency matrix
// under the lexicographically least labelling reached by individualization-refinement.
struct Certificate {
    int order = 0;
    int size = 0;
    std::vector<std::uint8_t> bits;

    std::string hex() const
    {
        static const char* digits = "0123456789abcdef";
        std::string out = std::to_string(order) + ":" + std::to_string(size) + ":";
        for (auto b : bits) {
            out += digits[b >> 4];
            out += digits[b & 15];
        }
        return out;
    }

    friend bool operator==(const Certificate&, const Certificate&) = default;
    friend auto operator<=>(const Certificate&, const Certificate&) = default;
};

namespace detail {

// Colors are 0..c-1 and only ever depend on isomorphism-invariant data.
inline std::vector<int> refine(const Graph& g, std::vector<int> color)
{
    int n = g.order();
    int classes = color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
    std::vector<std::vector<int>> sig(n);
    while (true) {
        for (int v = 0; v < n; ++v) {
            sig[v].assign(1, color[v]);
            for (int w : g.neighbors(v)) sig[v].push_back(color[w]);
            std::sort(sig[v].begin() + 1, sig[v].end());
        }
        std::vector<int> order(n);
        for (int v = 0; v < n; ++v) order[v] = v;
        std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
        std::vector<int> next(n);
        int c = -1;
        for (int t = 0; t < n; ++t) {
            if (t == 0 || sig[order[t]] != sig[order[t - 1]]) ++c;
            next[order[t]] = c;
        }
        color.swap(next);
        if (c + 1 == classes) return color;
        classes = c + 1;
    }
}

inline std::vector<std::uint8_t> pack(const Graph& g, const std::vector<int>& pos)
{
    int n = g.order();
    std::vector<int> at(n);
    for (int v = 0; v < n; ++v) at[pos[v]] = v;
    std::vector<std::uint8_t> out((static_cast<std::size_t>(n) * (n - 1) / 2 + 7) / 8, 0);
    std::size_t bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (g.has_edge(at[i], at[j])) out[bit / 8] |= static_cast<std::uint8_t>(0x80 >> (bit % 8));
    return out;
}

inline void search(const Graph& g, const std::vector<int>& color, std::vector<std::uint8_t>& best, bool& have)
{
    int n = g.order();
    std::vector<int> count(n, 0);
    for (int c : color) ++count[c];
    int target = -1;
    for (int c = 0; c < n; ++c)
        if (count[c] > 1) {
            target = c;
            break;
        }
    if (target < 0) {
        auto bits = pack(g, color);
        if (!have || bits < best) {
            best = std::move(bits);
            have = true;
        }
        return;
    }
    for (int v = 0; v < n; ++v) {
        if (color[v] != target) continue;
        std::vector<int> next(n);
        for (int u = 0; u < n; ++u) next[u] = 2 * color[u] + (color[u] == target && u != v ? 1 : 0);
        std::vector<int> vals(next);
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        for (int& x : next) x = static_cast<int>(std::lower_bound(vals.begin(), vals.end(), x) - vals.begin());
        search(g, refine(g, std::move(next)), best, have);
    }
}

} // namespace detail

inline Certificate canonical_certificate(const Graph& g)
{
    Certificate cert{g.order(), g.size(), {}};
    if (g.order() == 0) return cert;
    bool have = false;
    detail::search(g, detail::refine(g, std::vector<int>(g.order(), 0)), cert.bits, have);
    return cert;
}

inline bool isomorphic(const Graph& a, const Graph& b)
{
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_certificate(a) == canonical_certificate(b);
}

} // namespace plab
