#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "canonical.hpp"
#include "catalog.hpp"
#include "friendliness.hpp"
#include "symmetry.hpp"

namespace plab {

struct ClassRecord {
    DecoratedPermutation representative;
    int n = 0, k = 0, interior = 0;
    bool prime = false;
    bool mutation_friendly = false;
    bool very_mutation_friendly = false;
    int order = 0, size = 0; // exchange graph, filled for prime classes only
    Certificate certificate;
    std::string name;
};

struct SweepOptions {
    int max_n = -1; // -1 means 2i + 2 (at least 3)
    int jobs = 1;
    std::size_t vertex_budget = default_vertex_budget;
    std::size_t search_budget = default_search_budget;
};

inline int default_max_n(int interior) { return std::max(3, 2 * interior + 2); }

namespace detail {

inline void run_parallel(int jobs, std::size_t tasks, const std::function<void(std::size_t)>& work)
{
    jobs = std::max(1, jobs);
    if (jobs == 1 || tasks <= 1) {
        for (std::size_t t = 0; t < tasks; ++t) work(t);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex guard;
    for (int j = 0; j < jobs; ++j)
        pool.emplace_back([&] {
            for (std::size_t t; (t = next++) < tasks;) {
                try {
                    work(t);
                } catch (...) {
                    std::lock_guard lock(guard);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

inline bool connected_fast(const std::vector<int>& img)
{
    int n = static_cast<int>(img.size());
    for (int i = 0; i < n; ++i) {
        Mask dom = 0, im = 0;
        for (int len = 0; len < n - 1; ++len) {
            int x = (i + len) % n;
            dom |= Mask{1} << x;
            im |= Mask{1} << (img[x] - 1);
            if (dom == im) return false;
        }
    }
    return true;
}

} // namespace detail

// Connected permutations of [n] with the given interior size that are least in their orbit.
inline std::vector<DecoratedPermutation> orbit_minima(int n, int interior, int jobs = 1)
{
    std::vector<std::vector<DecoratedPermutation>> shards(n);
    detail::run_parallel(jobs, static_cast<std::size_t>(n - 1), [&](std::size_t t) {
        int first = static_cast<int>(t) + 2;
        std::vector<int> img(n), rest;
        for (int v = 1; v <= n; ++v)
            if (v != first) rest.push_back(v);
        img[0] = first;
        do {
            std::copy(rest.begin(), rest.end(), img.begin() + 1);
            if (interior_size_fast(img) != interior) continue;
            if (!detail::connected_fast(img)) continue;
            if (!is_orbit_minimum(img)) continue;
            shards[t].emplace_back(img);
        } while (std::next_permutation(rest.begin(), rest.end()));
    });
    std::vector<DecoratedPermutation> out;
    for (auto& s : shards) out.insert(out.end(), s.begin(), s.end());
    std::sort(out.begin(), out.end());
    return out;
}

inline ClassRecord evaluate_class(const DecoratedPermutation& rep, const SweepOptions& opt = {})
{
    ClassRecord r;
    r.representative = rep;
    r.n = rep.size();
    auto I = necklace_from_permutation(rep);
    r.k = I.k();
    r.interior = interior_size(rep);
    r.prime = is_prime(I);
    if (!r.prime) return r;
    auto G = exchange_graph(I, opt.vertex_budget);
    FriendlinessOracle F(G);
    r.mutation_friendly = F.mutation_friendly();
    r.very_mutation_friendly = r.mutation_friendly && F.very_mutation_friendly(opt.search_budget);
    r.order = G.order();
    r.size = G.size();
    r.certificate = canonical_certificate(G.topology);
    r.name = catalog_name(r.certificate);
    return r;
}

// Every equivalence class with this interior size on up to max_n letters, prime ones evaluated.
inline std::vector<ClassRecord> sweep_classes(int interior, const SweepOptions& opt = {})
{
    int top = opt.max_n < 0 ? default_max_n(interior) : opt.max_n;
    std::vector<DecoratedPermutation> reps;
    for (int n = 3; n <= top; ++n) {
        auto part = orbit_minima(n, interior, opt.jobs);
        reps.insert(reps.end(), part.begin(), part.end());
    }
    std::vector<ClassRecord> out(reps.size());
    detail::run_parallel(opt.jobs, reps.size(), [&](std::size_t t) { out[t] = evaluate_class(reps[t], opt); });
    return out;
}

inline std::vector<ClassRecord> classify_prime_vmf(int interior, const SweepOptions& opt = {})
{
    std::vector<ClassRecord> out;
    for (auto& r : sweep_classes(interior, opt))
        if (r.prime && r.very_mutation_friendly) out.push_back(std::move(r));
    return out;
}

struct ComposedGraph {
    std::string name;
    int interior = 0;
    Graph graph;
    Certificate certificate;
};

// Cartesian products of prime very-mutation-friendly graphs whose interior sizes sum to at most i.
// factors[j] holds the prime classes of interior size j + 1.
inline std::vector<ComposedGraph> compose_products(int i, const std::vector<std::vector<ClassRecord>>& factors)
{
    struct Factor {
        std::string name;
        int interior;
        Graph graph;
    };
    std::vector<Factor> pool;
    std::map<Certificate, bool> seen_factor;
    for (const auto& level : factors)
        for (const auto& r : level) {
            if (r.interior < 1 || r.interior > i || seen_factor[r.certificate]) continue;
            seen_factor[r.certificate] = true;
            std::string nm = r.name.empty() ? r.representative.str() : r.name;
            pool.push_back({nm, r.interior, exchange_graph(r.representative).topology});
        }
    std::sort(pool.begin(), pool.end(), [](const Factor& a, const Factor& b) {
        if (a.interior != b.interior) return a.interior < b.interior;
        return std::make_pair(a.name.size(), a.name) < std::make_pair(b.name.size(), b.name);
    });

    std::vector<ComposedGraph> out;
    std::map<Certificate, std::size_t> where;
    std::function<void(std::size_t, int, const Graph&, const std::string&, int)> grow =
        [&](std::size_t from, int used, const Graph& g, const std::string& name, int parts) {
            auto cert = canonical_certificate(g);
            if (!where.count(cert)) {
                where[cert] = out.size();
                out.push_back({parts == 0 ? "A" : name, used, g, cert});
            }
            for (std::size_t f = from; f < pool.size(); ++f) {
                if (used + pool[f].interior > i) continue;
                grow(f, used + pool[f].interior, cartesian_product(g, pool[f].graph),
                     parts == 0 ? pool[f].name : name + "□" + pool[f].name, parts + 1);
            }
        };
    grow(0, 0, Graph(1), "", 0);
    return out;
}

inline std::vector<int> distinct_orders(const std::vector<ComposedGraph>& graphs)
{
    std::vector<int> out;
    for (const auto& g : graphs) out.push_back(g.graph.order());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::uint64_t catalan(int m)
{
    return binomial(2 * m, m) / static_cast<std::uint64_t>(m + 1);
}

// Top cell of Gr(2, i + 3): necklace {1,2}, {2,3}, ..., {i+3, 1}.
inline GrassmannNecklace triangulation_necklace(int i)
{
    int n = i + 3;
    std::vector<KSet> sets;
    for (int j = 1; j <= n; ++j) sets.push_back(KSet(n, {j, j % n + 1}));
    return GrassmannNecklace(std::move(sets));
}

} // namespace plab
