#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "canonical.hpp"
#include "exchange.hpp"
#include "tables.hpp"

namespace plab {

// Parses "1:2,3;2:1;3:1" into a graph on vertices 0..max-1.
inline Graph graph_from_listing(std::string_view text)
{
    std::vector<std::pair<int, int>> edges;
    int top = 0;
    auto number = [&](std::string_view s) {
        if (s.empty()) throw invalid_input("empty vertex number in adjacency listing");
        int v = 0;
        for (char c : s) {
            if (c < '0' || c > '9') throw invalid_input("bad vertex number '" + std::string(s) + "'");
            v = v * 10 + (c - '0');
        }
        if (v < 1) throw invalid_input("vertex numbers start at 1");
        top = std::max(top, v);
        return v;
    };
    std::size_t p = 0;
    while (p < text.size()) {
        auto q = text.find(';', p);
        if (q == std::string_view::npos) q = text.size();
        auto item = text.substr(p, q - p);
        auto colon = item.find(':');
        if (colon == std::string_view::npos) throw invalid_input("adjacency entry without ':'");
        int a = number(item.substr(0, colon));
        auto rest = item.substr(colon + 1);
        std::size_t r = 0;
        while (r < rest.size()) {
            auto t = rest.find(',', r);
            if (t == std::string_view::npos) t = rest.size();
            edges.emplace_back(a, number(rest.substr(r, t - r)));
            r = t + 1;
        }
        p = q + 1;
    }
    Graph g(top);
    for (auto [a, b] : edges) g.add_edge(a - 1, b - 1);
    return g;
}

struct NamedGraph {
    std::string name;
    Graph graph;
    Certificate certificate;
    std::string source; // adjacency listing, or the permutation whose exchange graph it is
};

// Named graphs A..Z6: listed ones parsed, drawn ones rebuilt from a member permutation.
inline const std::vector<NamedGraph>& graph_catalog()
{
    static const std::vector<NamedGraph> catalog = [] {
        std::vector<NamedGraph> out;
        for (const auto& d : tables::drawn_graphs()) {
            auto g = exchange_graph(parse_permutation(d.permutation)).topology;
            auto cert = canonical_certificate(g);
            out.push_back({std::string(d.name), std::move(g), std::move(cert), std::string(d.permutation)});
        }
        for (const auto& l : tables::listed_graphs()) {
            auto g = graph_from_listing(l.lists);
            auto cert = canonical_certificate(g);
            out.push_back({std::string(l.name), std::move(g), std::move(cert), std::string(l.lists)});
        }
        auto key = [](const std::string& s) { return std::make_pair(s.size() > 1, s); };
        std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return key(a.name) < key(b.name); });
        return out;
    }();
    return catalog;
}

inline const NamedGraph& catalog_graph(std::string_view name)
{
    for (const auto& g : graph_catalog())
        if (g.name == name) return g;
    throw invalid_input("no catalog graph named '" + std::string(name) + "'");
}

// All catalog names whose graph has this certificate.
inline std::vector<std::string> catalog_names(const Certificate& cert)
{
    std::vector<std::string> out;
    for (const auto& g : graph_catalog())
        if (g.certificate == cert) out.push_back(g.name);
    return out;
}

inline std::string catalog_name(const Certificate& cert)
{
    auto names = catalog_names(cert);
    std::string out;
    for (const auto& s : names) out += (out.empty() ? "" : "/") + s;
    return out;
}

} // namespace plab
