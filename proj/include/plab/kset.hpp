#pragma once

#include <algorithm>
#include <bit>
#include <cctype>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace plab {

using Mask = std::uint64_t;

inline constexpr int max_ground_size = 32;

inline Mask bit_of(int x) { return Mask{1} << (x - 1); }

inline void check_ground(int n)
{
    if (n < 1 || n > max_ground_size)
        throw invalid_input("ground set size must lie in 1.." + std::to_string(max_ground_size) + ", got " +
                            std::to_string(n));
}

// Position of x in the order i < i+1 < ... < n < 1 < ... < i-1.
inline int cyclic_rank(int i, int x, int n) { return ((x - i) % n + n) % n; }

// A subset of [n] stored as a bitmask. Canonical order is the integer order of the mask.
class KSet {
public:
    KSet() = default;
    KSet(int n, Mask bits) : bits_(bits), n_(n)
    {
        check_ground(n);
        if (n < 64 && (bits >> n) != 0)
            throw invalid_input("k-set has elements outside 1.." + std::to_string(n));
    }
    KSet(int n, std::initializer_list<int> elems) : KSet(n, std::vector<int>(elems)) {}
    KSet(int n, const std::vector<int>& elems) : n_(n)
    {
        check_ground(n);
        for (int x : elems) {
            if (x < 1 || x > n)
                throw invalid_input("element " + std::to_string(x) + " outside 1.." + std::to_string(n));
            if (bits_ & bit_of(x))
                throw invalid_input("duplicate element " + std::to_string(x));
            bits_ |= bit_of(x);
        }
    }

    Mask bits() const { return bits_; }
    int n() const { return n_; }
    int size() const { return std::popcount(bits_); }
    bool contains(int x) const { return x >= 1 && x <= n_ && (bits_ & bit_of(x)); }
    bool empty() const { return bits_ == 0; }

    std::vector<int> elements() const
    {
        std::vector<int> out;
        for (Mask b = bits_; b; b &= b - 1)
            out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    KSet with(int x) const { return KSet(n_, bits_ | bit_of(x)); }
    KSet without(int x) const { return KSet(n_, bits_ & ~bit_of(x)); }

    friend bool operator==(const KSet& a, const KSet& b) { return a.bits_ == b.bits_ && a.n_ == b.n_; }
    friend std::strong_ordering operator<=>(const KSet& a, const KSet& b)
    {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.bits_ <=> b.bits_;
    }

private:
    Mask bits_ = 0;
    int n_ = 0;
};

inline void require_same_ground(const KSet& a, const KSet& b)
{
    if (a.n() != b.n())
        throw invalid_input("k-sets live on different ground sets: " + std::to_string(a.n()) + " vs " +
                            std::to_string(b.n()));
}

inline KSet operator&(const KSet& a, const KSet& b)
{
    require_same_ground(a, b);
    return KSet(a.n(), a.bits() & b.bits());
}
inline KSet operator|(const KSet& a, const KSet& b)
{
    require_same_ground(a, b);
    return KSet(a.n(), a.bits() | b.bits());
}
inline KSet operator-(const KSet& a, const KSet& b)
{
    require_same_ground(a, b);
    return KSet(a.n(), a.bits() & ~b.bits());
}

// Labels 1..9 print as digits, larger ones in parentheses: 3(10)98712654.
inline std::string label_text(int x)
{
    return x < 10 ? std::to_string(x) : "(" + std::to_string(x) + ")";
}

// Reads a sequence of labels; accepts "1249", "1 2 4 9", "3 (10)", "3(10)98".
inline std::vector<int> parse_labels(std::string_view text)
{
    std::vector<int> out;
    for (std::size_t p = 0; p < text.size();) {
        char c = text[p];
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            ++p;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            out.push_back(c - '0');
            ++p;
        } else if (c == '(') {
            auto close = text.find(')', p);
            if (close == std::string_view::npos || close == p + 1)
                throw invalid_input("unbalanced parenthesis in '" + std::string(text) + "'");
            int v = 0;
            for (std::size_t q = p + 1; q < close; ++q) {
                if (!std::isdigit(static_cast<unsigned char>(text[q])))
                    throw invalid_input("non-digit inside parentheses in '" + std::string(text) + "'");
                v = v * 10 + (text[q] - '0');
                if (v > 1000) throw invalid_input("label too large in '" + std::string(text) + "'");
            }
            out.push_back(v);
            p = close + 1;
        } else {
            throw invalid_input("unexpected character '" + std::string(1, c) + "' in '" + std::string(text) + "'");
        }
    }
    return out;
}

inline std::string to_string(const KSet& s)
{
    std::string out;
    for (int x : s.elements()) {
        if (!out.empty()) out += ' ';
        out += label_text(x);
    }
    return out;
}

// Compact form used in tables: {1,2,4,9} -> "1249", {3,10} -> "3(10)".
inline std::string compact(const KSet& s)
{
    std::string out;
    for (int x : s.elements()) out += label_text(x);
    return out;
}

inline KSet parse_kset(int n, std::string_view text) { return KSet(n, parse_labels(text)); }

// True iff some rotation of seq is strictly increasing.
inline bool cyclically_ordered(const std::vector<int>& seq)
{
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] == seq[j])
                throw invalid_input("cyclic order test on a sequence with repeated element " +
                                    std::to_string(seq[i]));
    int descents = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (seq[i] > seq[(i + 1) % seq.size()]) ++descents;
    return descents <= 1;
}

// Elements of s listed in the order i < i+1 < ... < n < 1 < ... < i-1.
inline std::vector<int> cyclic_sort(int anchor, const KSet& s)
{
    if (anchor < 1 || anchor > s.n())
        throw invalid_input("anchor " + std::to_string(anchor) + " outside 1.." + std::to_string(s.n()));
    auto e = s.elements();
    std::rotate(e.begin(), std::lower_bound(e.begin(), e.end(), anchor), e.end());
    return e;
}

// Componentwise comparison of v and w after sorting both in the i-order.
inline bool kset_leq(int i, const KSet& v, const KSet& w)
{
    require_same_ground(v, w);
    if (v.size() != w.size())
        throw invalid_input("order comparison of sets with sizes " + std::to_string(v.size()) + " and " +
                            std::to_string(w.size()));
    auto a = cyclic_sort(i, v), b = cyclic_sort(i, w);
    int n = v.n();
    for (std::size_t t = 0; t < a.size(); ++t)
        if (cyclic_rank(i, a[t], n) > cyclic_rank(i, b[t], n)) return false;
    return true;
}

// Going once around the circle, the labels of a\b and b\a may change at most twice.
inline bool weakly_separated(const KSet& a, const KSet& b)
{
    require_same_ground(a, b);
    Mask da = a.bits() & ~b.bits(), db = b.bits() & ~a.bits();
    if (!da || !db) return true;
    int changes = 0, first = 0, prev = 0;
    for (int x = 1; x <= a.n(); ++x) {
        int side = (da & bit_of(x)) ? 1 : (db & bit_of(x)) ? 2 : 0;
        if (!side) continue;
        if (!first) first = side;
        else if (side != prev) ++changes;
        prev = side;
    }
    if (prev != first) ++changes;
    return changes <= 2;
}

// Direct search for an interleaving witness a < b < a' < b' (cyclically); slow cross-check.
inline bool weakly_separated_by_witness(const KSet& a, const KSet& b)
{
    require_same_ground(a, b);
    auto da = (a - b).elements(), db = (b - a).elements();
    for (int x : da)
        for (int y : db)
            for (int x2 : da)
                for (int y2 : db) {
                    if (x == x2 || y == y2) continue;
                    if (cyclically_ordered({x, y, x2, y2})) return false;
                }
    return true;
}

inline bool quasi_adjacent(const KSet& a, const KSet& b)
{
    require_same_ground(a, b);
    return a.size() == b.size() && std::popcount(a.bits() & b.bits()) == a.size() - 1;
}

// All k-subsets of [n] as masks in increasing integer order.
inline std::vector<Mask> all_ksubsets(int n, int k)
{
    std::vector<Mask> out;
    if (k < 0 || k > n) return out;
    if (k == 0) return {0};
    Mask m = (Mask{1} << k) - 1, limit = Mask{1} << n;
    while (m < limit) {
        out.push_back(m);
        Mask c = m & (~m + 1), r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
    return out;
}

} // namespace plab
