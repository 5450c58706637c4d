#pragma once

#include <memory>
#include <string>
#include <vector>

#include "kset.hpp"

namespace plab {

// A bijection of [n] written in one-line notation, 1-based values.
class DecoratedPermutation {
public:
    DecoratedPermutation() = default;
    explicit DecoratedPermutation(std::vector<int> images) : img_(std::move(images))
    {
        int n = size();
        check_ground(n);
        std::vector<bool> seen(n + 1, false);
        for (int v : img_) {
            if (v < 1 || v > n)
                throw invalid_input("permutation value " + std::to_string(v) + " outside 1.." + std::to_string(n));
            if (seen[v]) throw invalid_input("permutation repeats value " + std::to_string(v));
            seen[v] = true;
        }
    }

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i - 1]; }
    const std::vector<int>& images() const { return img_; }

    DecoratedPermutation inverse() const
    {
        std::vector<int> inv(img_.size());
        for (int i = 1; i <= size(); ++i) inv[img_[i - 1] - 1] = i;
        return DecoratedPermutation(std::move(inv));
    }

    std::string str() const
    {
        std::string out;
        for (int v : img_) out += label_text(v);
        return out;
    }

    friend bool operator==(const DecoratedPermutation&, const DecoratedPermutation&) = default;
    friend auto operator<=>(const DecoratedPermutation& a, const DecoratedPermutation& b)
    {
        return a.img_ <=> b.img_;
    }

private:
    std::vector<int> img_;
};

inline DecoratedPermutation parse_permutation(std::string_view text)
{
    return DecoratedPermutation(parse_labels(text));
}

// No proper nonempty circular interval [i, j) is mapped onto itself.
inline bool is_connected(const DecoratedPermutation& p)
{
    int n = p.size();
    for (int i = 1; i <= n; ++i) {
        Mask dom = 0, img = 0;
        for (int len = 1; len < n; ++len) {
            int x = (i - 1 + len - 1) % n + 1;
            dom |= bit_of(x);
            img |= bit_of(p(x));
            if (dom == img) return false;
        }
    }
    return true;
}

inline void require_connected(const DecoratedPermutation& p)
{
    if (p.size() < 3)
        throw invalid_input("permutation " + p.str() + " has fewer than 3 letters");
    if (!is_connected(p)) throw invalid_input("permutation " + p.str() + " is not connected");
}

class GrassmannNecklace {
public:
    GrassmannNecklace() = default;
    explicit GrassmannNecklace(std::vector<KSet> sets) : sets_(std::move(sets)) { validate(); }

    int n() const { return static_cast<int>(sets_.size()); }
    int k() const { return sets_.front().size(); }
    // 1-based, cyclic: at(n + 1) == at(1).
    const KSet& at(int i) const { return sets_[((i - 1) % n() + n()) % n()]; }
    const std::vector<KSet>& sets() const { return sets_; }
    bool contains(const KSet& s) const { return std::find(sets_.begin(), sets_.end(), s) != sets_.end(); }

    friend bool operator==(const GrassmannNecklace&, const GrassmannNecklace&) = default;

private:
    void validate() const
    {
        if (sets_.size() < 3) throw invalid_input("necklace needs at least 3 sets");
        int n = static_cast<int>(sets_.size());
        int k = sets_.front().size();
        for (int i = 1; i <= n; ++i) {
            const KSet& s = at(i);
            if (s.n() != n)
                throw invalid_input("necklace set " + to_string(s) + " is not a subset of 1.." + std::to_string(n));
            if (s.size() != k) throw invalid_input("necklace sets have different sizes");
            const KSet& next = at(i + 1);
            int nxt = i % n + 1;
            if (!next.contains(nxt))
                throw invalid_input("necklace set " + std::to_string(nxt) + " must contain " + std::to_string(nxt));
            if ((s.without(i).bits() & ~next.bits()) != 0)
                throw invalid_input("necklace set " + std::to_string(i) + " minus " + std::to_string(i) +
                                    " is not contained in set " + std::to_string(nxt));
        }
    }

    std::vector<KSet> sets_;
};

// I_i = { j : j comes strictly before the preimage of j in the i-order }.
inline GrassmannNecklace necklace_from_permutation(const DecoratedPermutation& p)
{
    require_connected(p);
    int n = p.size();
    auto inv = p.inverse();
    std::vector<KSet> sets;
    for (int i = 1; i <= n; ++i) {
        Mask m = 0;
        for (int j = 1; j <= n; ++j)
            if (cyclic_rank(i, j, n) < cyclic_rank(i, inv(j), n)) m |= bit_of(j);
        sets.emplace_back(n, m);
    }
    return GrassmannNecklace(std::move(sets));
}

// pi(i) = j where I_{i+1} = (I_i \ {i}) + {j}; an unchanged set containing i gives j = i.
inline DecoratedPermutation permutation_from_necklace(const GrassmannNecklace& I)
{
    int n = I.n();
    std::vector<int> img(n);
    for (int i = 1; i <= n; ++i) {
        const KSet& cur = I.at(i);
        const KSet& next = I.at(i + 1);
        if (!cur.contains(i))
            throw invalid_input("necklace set " + std::to_string(i) + " omits " + std::to_string(i) +
                                ", which gives a fixed point");
        Mask added = next.bits() & ~cur.without(i).bits();
        if (std::popcount(added) != 1) throw invalid_input("necklace step at " + std::to_string(i) + " is malformed");
        img[i - 1] = std::countr_zero(added) + 1;
    }
    DecoratedPermutation p(std::move(img));
    require_connected(p);
    return p;
}

// Ordered pairs (i, j) with i, pi(i), pi(j), j distinct and cyclically ordered.
inline int alignment_count(const DecoratedPermutation& p)
{
    int n = p.size(), count = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            int a = i, b = p(i), c = p(j), d = j;
            if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
            if (cyclically_ordered({a, b, c, d})) ++count;
        }
    return count;
}

// |I_1|, the number of j with j < pi^{-1}(j) in the usual order.
inline int necklace_rank(const DecoratedPermutation& p)
{
    auto inv = p.inverse();
    int k = 0;
    for (int j = 1; j <= p.size(); ++j)
        if (j < inv(j)) ++k;
    return k;
}

// Size shared by every maximal weakly separated collection over the necklace.
inline int maximal_collection_size(const DecoratedPermutation& p)
{
    int n = p.size(), k = necklace_rank(p);
    return k * (n - k) + 1 - alignment_count(p);
}

inline int interior_size(const DecoratedPermutation& p) { return maximal_collection_size(p) - p.size(); }

// Interior size without building the inverse repeatedly; used in bulk sweeps.
inline int interior_size_fast(const std::vector<int>& img)
{
    int n = static_cast<int>(img.size());
    int inv[max_ground_size + 1];
    for (int i = 0; i < n; ++i) inv[img[i]] = i + 1;
    int k = 0;
    for (int j = 1; j <= n; ++j)
        if (j < inv[j]) ++k;
    int align = 0;
    for (int i = 1; i <= n; ++i) {
        int a = i, b = img[i - 1];
        if (a == b) continue;
        for (int j = 1; j <= n; ++j) {
            int c = img[j - 1], d = j;
            if (i == j || c == d || a == c || a == d || b == c || b == d) continue;
            int r1 = (b - a + n) % n, r2 = (c - a + n) % n, r3 = (d - a + n) % n;
            if (r1 < r2 && r2 < r3) ++align;
        }
    }
    return k * (n - k) + 1 - align - n;
}

// The positroid M_I: k-sets J with I_i <=_i J for every i.
class PositroidView {
public:
    explicit PositroidView(std::shared_ptr<const GrassmannNecklace> I) : I_(std::move(I)) {}
    explicit PositroidView(const GrassmannNecklace& I) : I_(std::make_shared<GrassmannNecklace>(I)) {}

    const GrassmannNecklace& necklace() const { return *I_; }

    bool contains(const KSet& J) const
    {
        if (J.n() != I_->n()) throw invalid_input("set " + to_string(J) + " is over a different ground set");
        if (J.size() != I_->k())
            throw invalid_input("set " + to_string(J) + " has size " + std::to_string(J.size()) + ", expected " +
                                std::to_string(I_->k()));
        for (int i = 1; i <= I_->n(); ++i)
            if (!kset_leq(i, I_->at(i), J)) return false;
        return true;
    }

    // Members in canonical (mask) order, generated lazily from all k-subsets.
    std::vector<KSet> elements() const
    {
        std::vector<KSet> out;
        for (Mask m : all_ksubsets(I_->n(), I_->k())) {
            KSet J(I_->n(), m);
            if (contains(J)) out.push_back(J);
        }
        return out;
    }

private:
    std::shared_ptr<const GrassmannNecklace> I_;
};

// Every permutation of [n] that is connected, in lexicographic order.
inline std::vector<DecoratedPermutation> connected_permutations(int n)
{
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    std::vector<DecoratedPermutation> out;
    do {
        DecoratedPermutation p(img);
        if (is_connected(p)) out.push_back(std::move(p));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

} // namespace plab
