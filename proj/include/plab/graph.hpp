#pragma once

#include <algorithm>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace plab {

// Simple undirected graph on vertices 0..order-1.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order) : adj_(order) {}

    int order() const { return static_cast<int>(adj_.size()); }
    int size() const
    {
        std::size_t d = 0;
        for (const auto& a : adj_) d += a.size();
        return static_cast<int>(d / 2);
    }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    int add_vertex()
    {
        adj_.emplace_back();
        return order() - 1;
    }

    bool has_edge(int u, int v) const { return std::binary_search(adj_[u].begin(), adj_[u].end(), v); }

    void add_edge(int u, int v)
    {
        if (u == v) throw invalid_input("self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= order() || v >= order()) throw invalid_input("edge endpoint out of range");
        if (has_edge(u, v)) return;
        adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
        adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
    }

    std::vector<std::pair<int, int>> edges() const
    {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < order(); ++u)
            for (int v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    // Subgraph induced on `keep`, relabelled in the given order.
    Graph induced(const std::vector<int>& keep) const
    {
        std::vector<int> pos(order(), -1);
        for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<int>(i);
        Graph g(static_cast<int>(keep.size()));
        for (std::size_t i = 0; i < keep.size(); ++i)
            for (int w : adj_[keep[i]])
                if (pos[w] > static_cast<int>(i)) g.add_edge(static_cast<int>(i), pos[w]);
        return g;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<int>> adj_;
};

template <class Payload>
struct LabeledGraph {
    std::vector<Payload> vertices;
    Graph topology;

    int order() const { return topology.order(); }
    int size() const { return topology.size(); }
};

inline std::vector<int> component_labels(const Graph& g)
{
    std::vector<int> comp(g.order(), -1);
    int c = 0;
    for (int s = 0; s < g.order(); ++s) {
        if (comp[s] >= 0) continue;
        std::queue<int> q;
        q.push(s);
        comp[s] = c;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u))
                if (comp[w] < 0) {
                    comp[w] = c;
                    q.push(w);
                }
        }
        ++c;
    }
    return comp;
}

inline int component_count(const Graph& g)
{
    auto comp = component_labels(g);
    return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

// The empty graph counts as connected.
inline bool is_connected(const Graph& g) { return component_count(g) <= 1; }

// Vertex (u1, u2) maps to u1 * |V2| + u2.
inline Graph cartesian_product(const Graph& g1, const Graph& g2)
{
    int n1 = g1.order(), n2 = g2.order();
    Graph g(n1 * n2);
    for (int u1 = 0; u1 < n1; ++u1)
        for (int u2 = 0; u2 < n2; ++u2) {
            for (int w2 : g2.neighbors(u2))
                if (w2 > u2) g.add_edge(u1 * n2 + u2, u1 * n2 + w2);
            for (int w1 : g1.neighbors(u1))
                if (w1 > u1) g.add_edge(u1 * n2 + u2, w1 * n2 + u2);
        }
    return g;
}

template <class P1, class P2>
LabeledGraph<std::pair<P1, P2>> cartesian_product(const LabeledGraph<P1>& g1, const LabeledGraph<P2>& g2)
{
    LabeledGraph<std::pair<P1, P2>> out;
    for (const auto& a : g1.vertices)
        for (const auto& b : g2.vertices) out.vertices.emplace_back(a, b);
    out.topology = cartesian_product(g1.topology, g2.topology);
    return out;
}

struct Shape {
    enum Kind { path, cycle, tree, other } kind = other;
    int order = 0;

    std::string str() const
    {
        switch (kind) {
        case path: return "path(" + std::to_string(order) + ")";
        case cycle: return "cycle(" + std::to_string(order) + ")";
        case tree: return "tree";
        default: return "other";
        }
    }
    friend bool operator==(const Shape&, const Shape&) = default;
};

// K1 and K2 report as paths; cycles need at least three vertices.
inline Shape shape(const Graph& g)
{
    int n = g.order(), m = g.size();
    if (n == 0 || !is_connected(g)) return {Shape::other, n};
    int maxdeg = 0;
    bool all_two = true;
    for (int v = 0; v < n; ++v) {
        maxdeg = std::max(maxdeg, g.degree(v));
        all_two = all_two && g.degree(v) == 2;
    }
    if (m == n - 1) return {maxdeg <= 2 ? Shape::path : Shape::tree, n};
    if (all_two && n >= 3) return {Shape::cycle, n};
    return {Shape::other, n};
}

} // namespace plab
