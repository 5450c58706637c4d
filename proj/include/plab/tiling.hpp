#pragma once

#include <cmath>
#include <map>
#include <numbers>
#include <vector>

#include "collection.hpp"
#include "graph.hpp"

namespace plab {

// A face is a (k-1)-set (white) or (k+1)-set (black) together with its clique in the collection.
struct Face {
    KSet label;
    std::vector<KSet> clique;
    bool black = false;
};

struct Point {
    double x = 0, y = 0;
};

class Tiling {
public:
    explicit Tiling(const WSCollection& W) : W_(W)
    {
        int n = W.necklace().n();
        std::map<Mask, std::vector<KSet>> white, black;
        for (const auto& s : W.sets()) {
            for (int x : s.elements()) white[s.bits() & ~bit_of(x)].push_back(s);
            for (int x = 1; x <= n; ++x)
                if (!s.contains(x)) black[s.bits() | bit_of(x)].push_back(s);
        }
        for (auto& [m, c] : white)
            if (c.size() >= 3) faces_.push_back({KSet(n, m), c, false});
        for (auto& [m, c] : black)
            if (c.size() >= 3) faces_.push_back({KSet(n, m), c, true});
        for (std::size_t f = 0; f < faces_.size(); ++f)
            (faces_[f].black ? black_index_ : white_index_)[faces_[f].label.bits()] = f;
    }

    const WSCollection& collection() const { return W_; }
    const std::vector<Face>& faces() const { return faces_; }

    std::vector<Face> white_faces() const { return select(false); }
    std::vector<Face> black_faces() const { return select(true); }

    bool has_white_face(Mask label) const { return white_index_.count(label) != 0; }
    bool has_black_face(Mask label) const { return black_index_.count(label) != 0; }

    // Quasi-adjacent, with both the intersection and the union labelling faces.
    bool adjacent(const KSet& S, const KSet& T) const
    {
        if (!W_.contains(S) || !W_.contains(T))
            throw invalid_input("adjacency query on a set outside the collection");
        if (!quasi_adjacent(S, T)) return false;
        return has_white_face(S.bits() & T.bits()) && has_black_face(S.bits() | T.bits());
    }

    int white_faces_containing(const KSet& S) const
    {
        int c = 0;
        for (int x : S.elements()) c += has_white_face(S.bits() & ~bit_of(x));
        return c;
    }

    int black_faces_containing(const KSet& S) const
    {
        int c = 0;
        for (int x = 1; x <= S.n(); ++x)
            if (!S.contains(x)) c += has_black_face(S.bits() | bit_of(x));
        return c;
    }

    // Necklace sets sit on the boundary and never move, whatever their face count.
    bool is_mutatable_by_faces(const KSet& S) const
    {
        if (W_.necklace().contains(S)) return false;
        return white_faces_containing(S) == 2 && black_faces_containing(S) == 2;
    }

    // Vertex position: sum of unit vectors xi_i, with xi_i at angle pi(n+1-i)/(n+1).
    static Point embed(const KSet& S)
    {
        int n = S.n();
        Point p;
        for (int i : S.elements()) {
            double theta = std::numbers::pi * (n + 1 - i) / (n + 1);
            p.x += std::cos(theta);
            p.y += std::sin(theta);
        }
        return p;
    }

private:
    std::vector<Face> select(bool black) const
    {
        std::vector<Face> out;
        for (const auto& f : faces_)
            if (f.black == black) out.push_back(f);
        return out;
    }

    WSCollection W_;
    std::vector<Face> faces_;
    std::map<Mask, std::size_t> white_index_, black_index_;
};

// Vertices are the given sets; edges join tiling-adjacent pairs.
inline LabeledGraph<KSet> adjacency_graph(const Tiling& T, const std::vector<KSet>& W)
{
    LabeledGraph<KSet> g;
    g.vertices = W;
    g.topology = Graph(static_cast<int>(W.size()));
    for (std::size_t a = 0; a < W.size(); ++a)
        for (std::size_t b = a + 1; b < W.size(); ++b)
            if (T.adjacent(W[a], W[b])) g.topology.add_edge(static_cast<int>(a), static_cast<int>(b));
    return g;
}

inline LabeledGraph<KSet> adjacency_graph(const WSCollection& V, const std::vector<KSet>& W)
{
    return adjacency_graph(Tiling(V), W);
}

// Connected components of the adjacency graph on V minus the necklace.
inline std::vector<std::vector<KSet>> adjacency_grouping(const WSCollection& V)
{
    auto g = adjacency_graph(V, V.interior());
    auto comp = component_labels(g.topology);
    int c = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<std::vector<KSet>> out(c);
    for (std::size_t v = 0; v < comp.size(); ++v) out[comp[v]].push_back(g.vertices[v]);
    return out;
}

} // namespace plab
