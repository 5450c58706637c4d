#pragma once

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "exchange.hpp"

namespace plab {

inline constexpr std::size_t default_search_budget = 1'000'000;

// Every set of C reaches a necklace set through quasi-adjacent steps inside C and the necklace.
inline bool is_applicable(const GrassmannNecklace& I, const std::vector<KSet>& C)
{
    std::vector<KSet> pool(I.sets().begin(), I.sets().end());
    for (const auto& s : C)
        if (std::find(pool.begin(), pool.end(), s) == pool.end()) pool.push_back(s);
    std::vector<bool> reached(pool.size(), false);
    std::queue<std::size_t> q;
    for (std::size_t t = 0; t < pool.size(); ++t)
        if (I.contains(pool[t])) {
            reached[t] = true;
            q.push(t);
        }
    while (!q.empty()) {
        auto u = q.front();
        q.pop();
        for (std::size_t t = 0; t < pool.size(); ++t)
            if (!reached[t] && quasi_adjacent(pool[u], pool[t])) {
                reached[t] = true;
                q.push(t);
            }
    }
    return std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
}

// Answers membership questions about sub-families G(C) of one exchange graph.
class FriendlinessOracle {
public:
    using Bits = std::vector<std::uint64_t>;

    explicit FriendlinessOracle(const ExchangeGraph& G) : G_(G)
    {
        if (G.vertices.empty()) throw invalid_input("empty exchange graph");
        I_ = G.vertices.front().necklace_ptr();
        words_ = (G.order() + 63) / 64;
        for (int v = 0; v < G.order(); ++v)
            for (const auto& s : G.vertices[v].sets()) {
                auto& b = holders_[s.bits()];
                if (b.empty()) b.assign(words_, 0);
                b[v / 64] |= std::uint64_t{1} << (v % 64);
            }
    }

    const GrassmannNecklace& necklace() const { return *I_; }

    // Collections containing every set of C.
    Bits family(const std::vector<KSet>& C) const
    {
        Bits all(words_, ~std::uint64_t{0});
        if (G_.order() % 64) all.back() = (std::uint64_t{1} << (G_.order() % 64)) - 1;
        for (const auto& s : C) {
            auto it = holders_.find(s.bits());
            if (it == holders_.end()) return Bits(words_, 0);
            for (int w = 0; w < words_; ++w) all[w] &= it->second[w];
        }
        return all;
    }

    static bool empty(const Bits& b)
    {
        return std::all_of(b.begin(), b.end(), [](std::uint64_t w) { return w == 0; });
    }

    // Sets common to every collection of the family.
    std::vector<KSet> intersection(const Bits& fam) const
    {
        std::vector<KSet> out;
        for (const auto& [m, b] : holders_) {
            bool all = true;
            for (int w = 0; w < words_ && all; ++w) all = (fam[w] & ~b[w]) == 0;
            if (all) out.emplace_back(I_->n(), m);
        }
        return out;
    }

    // Sets appearing in at least one collection of the family.
    std::vector<KSet> union_of(const Bits& fam) const
    {
        std::vector<KSet> out;
        for (const auto& [m, b] : holders_) {
            bool any = false;
            for (int w = 0; w < words_ && !any; ++w) any = (fam[w] & b[w]) != 0;
            if (any) out.emplace_back(I_->n(), m);
        }
        return out;
    }

    // Nonempty family whose common sets are exactly C together with the necklace.
    bool mutation_friendly(const std::vector<KSet>& C) const
    {
        auto fam = family(C);
        if (empty(fam)) return false;
        std::set<KSet> want(C.begin(), C.end());
        want.insert(I_->sets().begin(), I_->sets().end());
        auto got = intersection(fam);
        return std::set<KSet>(got.begin(), got.end()) == want;
    }

    bool mutation_friendly() const { return mutation_friendly({}); }

    bool applicable(const std::vector<KSet>& C) const { return is_applicable(*I_, C); }

    // A chain W_1 > ... > W_{i-1} > I where W_j carries i - j interior sets and each G(W_j) is
    // applicable and mutation friendly. Built from the small end; failed prefixes are memoized.
    bool very_mutation_friendly(std::size_t budget = default_search_budget) const
    {
        if (!mutation_friendly()) return false;
        int i = G_.vertices.front().size() - static_cast<int>(I_->sets().size());
        if (i <= 1) return true;
        std::set<std::vector<KSet>> failed;
        std::size_t steps = 0;
        std::vector<KSet> chain;
        return extend(chain, i - 1, failed, steps, budget);
    }

private:
    bool extend(std::vector<KSet>& chain, int target, std::set<std::vector<KSet>>& failed, std::size_t& steps,
                std::size_t budget) const
    {
        if (static_cast<int>(chain.size()) == target) return true;
        auto fam = family(chain);
        for (const auto& s : union_of(fam)) {
            if (I_->contains(s) || std::find(chain.begin(), chain.end(), s) != chain.end()) continue;
            if (++steps > budget)
                throw budget_exceeded("chain search exceeded " + std::to_string(budget) + " steps");
            std::vector<KSet> next(chain);
            next.push_back(s);
            std::sort(next.begin(), next.end());
            if (failed.count(next)) continue;
            if (applicable(next) && mutation_friendly(next)) {
                auto saved = chain;
                chain = next;
                if (extend(chain, target, failed, steps, budget)) return true;
                chain = saved;
            }
            failed.insert(next);
        }
        return false;
    }

    const ExchangeGraph& G_;
    std::shared_ptr<const GrassmannNecklace> I_;
    int words_ = 0;
    std::map<Mask, Bits> holders_;
};

inline bool is_mutation_friendly(const ExchangeGraph& G) { return FriendlinessOracle(G).mutation_friendly(); }

inline bool is_very_mutation_friendly(const ExchangeGraph& G, std::size_t budget = default_search_budget)
{
    return FriendlinessOracle(G).very_mutation_friendly(budget);
}

} // namespace plab
