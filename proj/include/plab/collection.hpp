#pragma once

#include <algorithm>
#include <memory>
#include <vector>

#include "positroid.hpp"

namespace plab {

// A weakly separated collection over a fixed necklace; sets kept in canonical order.
class WSCollection {
public:
    WSCollection() = default;
    WSCollection(std::shared_ptr<const GrassmannNecklace> I, std::vector<KSet> sets)
        : I_(std::move(I)), sets_(std::move(sets))
    {
        std::sort(sets_.begin(), sets_.end());
        if (std::adjacent_find(sets_.begin(), sets_.end()) != sets_.end())
            throw invalid_input("collection lists a set twice");
    }

    const GrassmannNecklace& necklace() const { return *I_; }
    const std::shared_ptr<const GrassmannNecklace>& necklace_ptr() const { return I_; }
    const std::vector<KSet>& sets() const { return sets_; }
    int size() const { return static_cast<int>(sets_.size()); }
    bool contains(const KSet& s) const { return std::binary_search(sets_.begin(), sets_.end(), s); }
    bool contains_mask(Mask m) const { return contains(KSet(I_->n(), m)); }

    std::vector<KSet> interior() const
    {
        std::vector<KSet> out;
        for (const auto& s : sets_)
            if (!I_->contains(s)) out.push_back(s);
        return out;
    }

    // Byte-comparable identity: the sorted mask list.
    std::vector<Mask> key() const
    {
        std::vector<Mask> out;
        out.reserve(sets_.size());
        for (const auto& s : sets_) out.push_back(s.bits());
        return out;
    }

    friend bool operator==(const WSCollection& a, const WSCollection& b) { return a.sets_ == b.sets_; }

private:
    std::shared_ptr<const GrassmannNecklace> I_;
    std::vector<KSet> sets_;
};

struct MutationSite {
    KSet victim;
    KSet replacement;
    // victim = V + {a, c}, replacement = V + {b, d}, a b c d cyclically ordered
    KSet V;
    int a = 0, b = 0, c = 0, d = 0;

    friend bool operator==(const MutationSite& x, const MutationSite& y)
    {
        return x.victim == y.victim && x.replacement == y.replacement;
    }
};

inline bool pairwise_weakly_separated(const std::vector<KSet>& sets)
{
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if (!weakly_separated(sets[i], sets[j])) return false;
    return true;
}

// Necklace first, then every positroid member in canonical order that stays compatible.
inline WSCollection initial_maximal_collection(std::shared_ptr<const GrassmannNecklace> I)
{
    PositroidView M(I);
    std::vector<KSet> chosen(I->sets().begin(), I->sets().end());
    std::sort(chosen.begin(), chosen.end());
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
    if (!pairwise_weakly_separated(chosen)) throw internal_error("necklace sets are not weakly separated");
    for (Mask m : all_ksubsets(I->n(), I->k())) {
        KSet J(I->n(), m);
        if (std::binary_search(chosen.begin(), chosen.end(), J) || !M.contains(J)) continue;
        bool ok = true;
        for (const auto& s : chosen)
            if (!weakly_separated(s, J)) {
                ok = false;
                break;
            }
        if (ok) chosen.insert(std::upper_bound(chosen.begin(), chosen.end(), J), J);
    }
    return WSCollection(std::move(I), std::move(chosen));
}

inline WSCollection initial_maximal_collection(const GrassmannNecklace& I)
{
    return initial_maximal_collection(std::make_shared<const GrassmannNecklace>(I));
}

// Square moves: V+{a,c} leaves, V+{b,d} enters, when V+ab, V+bc, V+cd, V+da are all present.
inline std::vector<MutationSite> mutation_sites(const WSCollection& W)
{
    const auto& I = W.necklace();
    int n = I.n();
    PositroidView M(W.necklace_ptr());
    std::vector<MutationSite> out;
    for (const auto& S : W.sets()) {
        if (I.contains(S)) continue;
        auto elems = S.elements();
        bool found = false;
        MutationSite site;
        for (std::size_t x = 0; x < elems.size(); ++x)
            for (std::size_t y = x + 1; y < elems.size(); ++y) {
                int a = elems[x], c = elems[y];
                Mask V = S.bits() & ~bit_of(a) & ~bit_of(c);
                for (int b = a + 1; b < c; ++b) {
                    if (S.contains(b)) continue;
                    if (!W.contains_mask(V | bit_of(a) | bit_of(b)) || !W.contains_mask(V | bit_of(b) | bit_of(c)))
                        continue;
                    for (int t = 1; t < n - (c - a); ++t) {
                        int d = (c - 1 + t) % n + 1;
                        if (S.contains(d)) continue;
                        if (!W.contains_mask(V | bit_of(c) | bit_of(d)) ||
                            !W.contains_mask(V | bit_of(d) | bit_of(a)))
                            continue;
                        KSet repl(n, V | bit_of(b) | bit_of(d));
                        if (!M.contains(repl)) continue;
                        if (found && !(repl == site.replacement))
                            throw internal_error("set " + to_string(S) + " admits two different replacements");
                        if (!found) site = MutationSite{S, repl, KSet(n, V), a, b, c, d};
                        found = true;
                    }
                }
            }
        if (found) out.push_back(site);
    }
    return out;
}

inline WSCollection apply_site(const WSCollection& W, const MutationSite& site)
{
    std::vector<KSet> sets;
    sets.reserve(W.sets().size());
    for (const auto& s : W.sets())
        if (!(s == site.victim)) sets.push_back(s);
    sets.push_back(site.replacement);
    return WSCollection(W.necklace_ptr(), std::move(sets));
}

inline WSCollection mutate(const WSCollection& W, const MutationSite& site)
{
    auto sites = mutation_sites(W);
    if (std::find(sites.begin(), sites.end(), site) == sites.end())
        throw invalid_input("mutation site " + to_string(site.victim) + " -> " + to_string(site.replacement) +
                            " does not belong to this collection");
    auto out = apply_site(W, site);
#ifndef NDEBUG
    if (!pairwise_weakly_separated(out.sets()))
        throw internal_error("mutation produced a collection that is not weakly separated");
    if (!PositroidView(W.necklace_ptr()).contains(site.replacement))
        throw internal_error("mutation left the positroid");
#endif
    return out;
}

} // namespace plab
