#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "positroid.hpp"

namespace plab {

namespace detail {
inline int wrap(int x, int n) { return ((x - 1) % n + n) % n + 1; }
} // namespace detail

inline DecoratedPermutation inverse(const DecoratedPermutation& p) { return p.inverse(); }

// LR^{e}[pi](j) = e - pi^{-1}(e - j), e even.
inline DecoratedPermutation lr(const DecoratedPermutation& p, int e)
{
    if (e % 2 != 0) throw invalid_input("reflection index must be even, got " + std::to_string(e));
    int n = p.size();
    auto inv = p.inverse();
    std::vector<int> img(n);
    for (int j = 1; j <= n; ++j) img[j - 1] = detail::wrap(e - inv(detail::wrap(e - j, n)), n);
    return DecoratedPermutation(std::move(img));
}

// BLR^{o}[pi](j) = o - pi^{-1}(o - j), o odd, n even only.
inline DecoratedPermutation blr(const DecoratedPermutation& p, int o)
{
    int n = p.size();
    if (n % 2 != 0) throw invalid_input("odd-index reflection needs an even number of letters, got " + std::to_string(n));
    if (o % 2 == 0) throw invalid_input("odd-index reflection index must be odd, got " + std::to_string(o));
    auto inv = p.inverse();
    std::vector<int> img(n);
    for (int j = 1; j <= n; ++j) img[j - 1] = detail::wrap(o - inv(detail::wrap(o - j, n)), n);
    return DecoratedPermutation(std::move(img));
}

// R^{i}[pi](j) = pi(j - i) + i.
inline DecoratedPermutation rotate(const DecoratedPermutation& p, int i)
{
    int n = p.size();
    std::vector<int> img(n);
    for (int j = 1; j <= n; ++j) img[j - 1] = detail::wrap(p(detail::wrap(j - i, n)) + i, n);
    return DecoratedPermutation(std::move(img));
}

// Every listed generator, in a fixed order.
inline std::vector<DecoratedPermutation> generator_images(const DecoratedPermutation& p)
{
    int n = p.size();
    std::vector<DecoratedPermutation> out{inverse(p)};
    for (int i = 1; i <= n; ++i) out.push_back(lr(p, 2 * i));
    if (n % 2 == 0)
        for (int i = 1; i <= n; ++i) out.push_back(blr(p, 2 * i - 1));
    for (int i = 1; i < n; ++i) out.push_back(rotate(p, i));
    return out;
}

// Closure under the generators, sorted; front() is the canonical representative.
inline std::vector<DecoratedPermutation> orbit(const DecoratedPermutation& p)
{
    std::set<DecoratedPermutation> seen{p};
    std::vector<DecoratedPermutation> todo{p};
    while (!todo.empty()) {
        auto cur = std::move(todo.back());
        todo.pop_back();
        for (auto& q : generator_images(cur))
            if (seen.insert(q).second) todo.push_back(std::move(q));
    }
    return {seen.begin(), seen.end()};
}

inline DecoratedPermutation canonical_representative(const DecoratedPermutation& p) { return orbit(p).front(); }

inline bool equivalent(const DecoratedPermutation& a, const DecoratedPermutation& b)
{
    if (a.size() != b.size()) return false;
    auto o = orbit(a);
    return std::binary_search(o.begin(), o.end(), b);
}

// The orbit equals { g pi^{+-1} g^{-1} : g dihedral }, so membership of a smaller element can be
// tested on 4n candidates without building the closure.
inline bool is_orbit_minimum(const std::vector<int>& img)
{
    int n = static_cast<int>(img.size());
    int inv[max_ground_size + 1];
    for (int i = 0; i < n; ++i) inv[img[i]] = i + 1;
    int cand[max_ground_size];
    for (int form = 0; form < 4; ++form) {
        const int* base = (form & 1) ? inv : nullptr;
        bool reflect = form & 2;
        for (int s = 0; s < n; ++s) {
            // g(x) = x + s or g(x) = s - x; conjugate of pi or its inverse by g
            for (int j = 1; j <= n; ++j) {
                int gj = reflect ? detail::wrap(s - j, n) : detail::wrap(j - s, n); // g^{-1}(j)
                int v = base ? base[gj] : img[gj - 1];
                cand[j - 1] = reflect ? detail::wrap(s - v, n) : detail::wrap(v + s, n);
            }
            for (int j = 0; j < n; ++j) {
                if (cand[j] < img[j]) return false;
                if (cand[j] > img[j]) break;
            }
        }
    }
    return true;
}

// Gluing along I_n I_1 of the first necklace and J_1 J_2 of the second; result on n + m - 2 letters.
inline DecoratedPermutation glue(const DecoratedPermutation& p1, const DecoratedPermutation& p2)
{
    require_connected(p1);
    require_connected(p2);
    int n = p1.size(), m = p2.size();
    std::vector<int> img(n + m - 2);
    for (int a = 1; a < n; ++a) img[a - 1] = p1(a) == n ? p2(1) + n - 2 : p1(a);
    for (int a = 2; a <= m; ++a) img[n + a - 3] = p2(a) == 1 ? p1(n) : p2(a) + n - 2;
    DecoratedPermutation out(std::move(img));
    require_connected(out);
    if (interior_size(out) != interior_size(p1) + interior_size(p2))
        throw internal_error("glue of " + p1.str() + " and " + p2.str() + " does not add interior sizes");
    return out;
}

struct Chord {
    int i = 0, j = 0; // necklace positions, i < j
    friend bool operator==(const Chord&, const Chord&) = default;
};

struct Decomposition {
    std::vector<Chord> chords;
    // Regions touching the boundary circle, each as necklace positions in increasing order.
    std::vector<std::vector<int>> parts;
    // Regions enclosed entirely by crossing chords; they carry no necklace set.
    int enclosed = 0;

    int region_count() const { return static_cast<int>(parts.size()) + enclosed; }
};

namespace detail {

inline bool crosses(const Chord& a, const Chord& b)
{
    return (a.i < b.i && b.i < a.j && a.j < b.j) || (b.i < a.i && a.i < b.j && b.j < a.j);
}

} // namespace detail

// Necklace sets sit at positions 1..n on a circle; chords join non-consecutive quasi-adjacent
// ones. The parts are the regions the chords cut the disk into. Two boundary arcs lie in the
// same region iff they are on the same side of every chord.
inline Decomposition decomposition_set(const GrassmannNecklace& I)
{
    int n = I.n();
    Decomposition d;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j) {
            if (i == 1 && j == n) continue;
            if (quasi_adjacent(I.at(i), I.at(j))) d.chords.push_back({i, j});
        }
    int crossings = 0;
    for (std::size_t a = 0; a < d.chords.size(); ++a)
        for (std::size_t b = a + 1; b < d.chords.size(); ++b) crossings += detail::crosses(d.chords[a], d.chords[b]);

    // arc v joins positions v and v+1 (arc n joins n and 1)
    std::map<std::vector<bool>, std::vector<int>> regions;
    for (int v = 1; v <= n; ++v) {
        std::vector<bool> side;
        for (const auto& c : d.chords) side.push_back(c.i <= v && v < c.j);
        auto& part = regions[side];
        part.push_back(v);
        part.push_back(v % n + 1);
    }
    for (auto& [side, part] : regions) {
        std::sort(part.begin(), part.end());
        part.erase(std::unique(part.begin(), part.end()), part.end());
        d.parts.push_back(part);
    }
    std::sort(d.parts.begin(), d.parts.end());
    d.enclosed = 1 + static_cast<int>(d.chords.size()) + crossings - static_cast<int>(d.parts.size());
    return d;
}

inline bool is_prime(const GrassmannNecklace& I) { return decomposition_set(I).region_count() == 1; }

// Some circular interval of length 2..n-2 loses exactly one element under pi.
inline bool interval_nonprime_heuristic(const DecoratedPermutation& p)
{
    int n = p.size();
    for (int i = 1; i <= n; ++i) {
        Mask dom = 0, img = 0;
        for (int len = 1; len <= n - 2; ++len) {
            int x = detail::wrap(i + len - 1, n);
            dom |= bit_of(x);
            img |= bit_of(p(x));
            if (len >= 2 && std::popcount(img & ~dom) == 1) return true;
        }
    }
    return false;
}

} // namespace plab
