#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "collection.hpp"
#include "graph.hpp"

namespace plab {

inline constexpr std::size_t default_vertex_budget = 1'000'000;

using ExchangeGraph = LabeledGraph<WSCollection>;

namespace detail {

struct KeyHash {
    std::size_t operator()(const std::vector<Mask>& key) const
    {
        std::uint64_t h = 1469598103934665603ull;
        for (Mask m : key) {
            h ^= m;
            h *= 1099511628211ull;
            h ^= h >> 29;
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace detail

// Breadth-first closure under square moves, starting from the greedy collection.
// Vertices end up sorted by their sorted-mask encoding, so the result does not depend on visit order.
inline ExchangeGraph exchange_graph(std::shared_ptr<const GrassmannNecklace> I,
                                    std::size_t vertex_budget = default_vertex_budget)
{
    std::vector<WSCollection> found;
    std::unordered_map<std::vector<Mask>, int, detail::KeyHash> index;
    std::vector<std::pair<int, int>> edges;

    auto start = initial_maximal_collection(I);
    index.emplace(start.key(), 0);
    found.push_back(std::move(start));
    for (std::size_t head = 0; head < found.size(); ++head) {
        auto sites = mutation_sites(found[head]);
        for (const auto& site : sites) {
            auto next = apply_site(found[head], site);
            auto key = next.key();
            auto it = index.find(key);
            int target;
            if (it == index.end()) {
                if (found.size() >= vertex_budget)
                    throw budget_exceeded("exchange graph exceeds " + std::to_string(vertex_budget) + " vertices");
                target = static_cast<int>(found.size());
                index.emplace(std::move(key), target);
                found.push_back(std::move(next));
            } else {
                target = it->second;
            }
            edges.emplace_back(static_cast<int>(head), target);
        }
    }

    std::vector<int> order(found.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::vector<Mask>> keys;
    keys.reserve(found.size());
    for (const auto& w : found) keys.push_back(w.key());
    std::sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });
    std::vector<int> pos(found.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);

    ExchangeGraph g;
    g.topology = Graph(static_cast<int>(found.size()));
    for (int v : order) g.vertices.push_back(std::move(found[v]));
    for (auto [u, v] : edges) g.topology.add_edge(pos[u], pos[v]);
    return g;
}

inline ExchangeGraph exchange_graph(const GrassmannNecklace& I, std::size_t vertex_budget = default_vertex_budget)
{
    return exchange_graph(std::make_shared<const GrassmannNecklace>(I), vertex_budget);
}

inline ExchangeGraph exchange_graph(const DecoratedPermutation& p, std::size_t vertex_budget = default_vertex_budget)
{
    return exchange_graph(necklace_from_permutation(p), vertex_budget);
}

struct CConstantGraph {
    ExchangeGraph graph;
    int codimension = 0;
};

inline void require_compatible(const GrassmannNecklace& I, const std::vector<KSet>& C)
{
    PositroidView M(I);
    for (const auto& s : C)
        if (!M.contains(s)) throw invalid_input("set " + to_string(s) + " lies outside the positroid");
    if (!pairwise_weakly_separated(C)) throw invalid_input("constant sets are not pairwise weakly separated");
}

// Induced subgraph of G on the collections that contain every set of C.
inline CConstantGraph cconstant_graph(const ExchangeGraph& G, const std::vector<KSet>& C)
{
    if (G.vertices.empty()) throw invalid_input("empty exchange graph");
    require_compatible(G.vertices.front().necklace(), C);
    std::vector<int> keep;
    for (int v = 0; v < G.order(); ++v) {
        bool all = true;
        for (const auto& s : C)
            if (!G.vertices[v].contains(s)) {
                all = false;
                break;
            }
        if (all) keep.push_back(v);
    }
    CConstantGraph out;
    for (int v : keep) out.graph.vertices.push_back(G.vertices[v]);
    out.graph.topology = G.topology.induced(keep);
    std::vector<KSet> distinct(C);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    out.codimension = G.vertices.front().size() - static_cast<int>(distinct.size());
    return out;
}

inline CConstantGraph cconstant_graph(const GrassmannNecklace& I, const std::vector<KSet>& C,
                                      std::size_t vertex_budget = default_vertex_budget)
{
    require_compatible(I, C);
    return cconstant_graph(exchange_graph(I, vertex_budget), C);
}

inline std::uint64_t binomial(int n, int k)
{
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline constexpr std::uint64_t brute_force_limit = 70;

// Maximal cliques of the weak-separation graph on M_I that contain I (Bron-Kerbosch with pivot).
inline std::vector<std::vector<KSet>> brute_force_maximal_collections(const GrassmannNecklace& I)
{
    if (binomial(I.n(), I.k()) > brute_force_limit)
        throw invalid_input("brute force is limited to C(n,k) <= " + std::to_string(brute_force_limit));
    auto members = PositroidView(I).elements();
    int m = static_cast<int>(members.size());
    std::vector<std::uint64_t> nb(m, 0);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (a != b && weakly_separated(members[a], members[b])) nb[a] |= std::uint64_t{1} << b;

    std::uint64_t R = 0, P = 0;
    for (int a = 0; a < m; ++a) (I.contains(members[a]) ? R : P) |= std::uint64_t{1} << a;
    for (int a = 0; a < m; ++a)
        if (R >> a & 1) P &= nb[a];

    std::vector<std::vector<KSet>> out;
    std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)> bk = [&](std::uint64_t r, std::uint64_t p,
                                                                              std::uint64_t x) {
        if (!p && !x) {
            std::vector<KSet> clique;
            for (int a = 0; a < m; ++a)
                if (r >> a & 1) clique.push_back(members[a]);
            out.push_back(std::move(clique));
            return;
        }
        std::uint64_t px = p | x;
        int pivot = std::countr_zero(px);
        for (std::uint64_t cand = p & ~nb[pivot]; cand; cand &= cand - 1) {
            int v = std::countr_zero(cand);
            std::uint64_t vb = std::uint64_t{1} << v;
            bk(r | vb, p & nb[v], x & nb[v]);
            p &= ~vb;
            x |= vb;
        }
    };
    bk(R, P, 0);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace plab
