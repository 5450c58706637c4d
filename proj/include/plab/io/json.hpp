#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "../classify.hpp"
#include "../exchange.hpp"
#include "../symmetry.hpp"

namespace plab::io {

using json = nlohmann::ordered_json;

inline json sets_json(const std::vector<KSet>& sets)
{
    json out = json::array();
    for (const auto& s : sets) out.push_back(s.elements());
    return out;
}

inline std::vector<KSet> sets_from_json(int n, const json& j)
{
    if (!j.is_array()) throw invalid_input("expected an array of sets");
    std::vector<KSet> out;
    for (const auto& s : j) {
        if (!s.is_array()) throw invalid_input("expected a set as an array of labels");
        out.emplace_back(n, s.get<std::vector<int>>());
    }
    return out;
}

inline json necklace_json(const GrassmannNecklace& I)
{
    return json{{"n", I.n()}, {"k", I.k()}, {"necklace", sets_json(I.sets())}};
}

// Accepts {"necklace": [[..], ..]} with optional "n", or a bare array of sets.
inline GrassmannNecklace necklace_from_json(const json& j)
{
    const json& arr = j.is_object() ? j.at("necklace") : j;
    if (!arr.is_array() || arr.empty()) throw invalid_input("necklace must be a nonempty array of sets");
    int n = j.is_object() && j.contains("n") ? j.at("n").get<int>() : static_cast<int>(arr.size());
    if (n != static_cast<int>(arr.size())) throw invalid_input("necklace length differs from n");
    return GrassmannNecklace(sets_from_json(n, arr));
}

inline GrassmannNecklace parse_necklace_json(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw invalid_input(std::string("malformed necklace JSON: ") + e.what());
    }
    try {
        return necklace_from_json(j);
    } catch (const json::exception& e) {
        throw invalid_input(std::string("bad necklace JSON: ") + e.what());
    }
}

inline json collection_json(const WSCollection& W)
{
    const auto& I = W.necklace();
    return json{{"n", I.n()}, {"k", I.k()}, {"necklace", sets_json(I.sets())}, {"sets", sets_json(W.sets())}};
}

// "1 → 2,3,4", vertices numbered from 1.
inline std::vector<std::string> adjacency_lines(const Graph& g)
{
    std::vector<std::string> out;
    for (int v = 0; v < g.order(); ++v) {
        std::string line = std::to_string(v + 1) + " →";
        std::string sep = " ";
        for (int u : g.neighbors(v)) {
            line += sep + std::to_string(u + 1);
            sep = ",";
        }
        out.push_back(line);
    }
    return out;
}

inline Graph graph_from_adjacency_lines(const std::vector<std::string>& lines)
{
    static const std::string arrow = "→";
    Graph g(static_cast<int>(lines.size()));
    for (std::size_t v = 0; v < lines.size(); ++v) {
        const auto& line = lines[v];
        auto at = line.find(arrow);
        if (at == std::string::npos) throw invalid_input("adjacency line without arrow: " + line);
        if (std::stoi(line.substr(0, at)) != static_cast<int>(v) + 1)
            throw invalid_input("adjacency lines out of order at " + line);
        std::string rest = line.substr(at + arrow.size());
        std::replace(rest.begin(), rest.end(), ',', ' ');
        std::istringstream in(rest);
        for (int u; in >> u;) g.add_edge(static_cast<int>(v), u - 1);
        if (!in.eof()) throw invalid_input("bad neighbour list in " + line);
    }
    return g;
}

inline json graph_json(const ExchangeGraph& G)
{
    json out;
    if (!G.vertices.empty()) {
        const auto& I = G.vertices.front().necklace();
        out["permutation"] = permutation_from_necklace(I).str();
        out["n"] = I.n();
        out["k"] = I.k();
        out["necklace"] = sets_json(I.sets());
    }
    out["order"] = G.order();
    out["size"] = G.size();
    out["certificate"] = canonical_certificate(G.topology).hex();
    out["adjacency"] = adjacency_lines(G.topology);
    json cols = json::array();
    for (const auto& W : G.vertices) cols.push_back(sets_json(W.sets()));
    out["collections"] = std::move(cols);
    return out;
}

inline ExchangeGraph graph_from_json(const json& j)
{
    ExchangeGraph G;
    G.topology = graph_from_adjacency_lines(j.at("adjacency").get<std::vector<std::string>>());
    if (j.contains("necklace")) {
        auto I = std::make_shared<const GrassmannNecklace>(necklace_from_json(j));
        for (const auto& c : j.at("collections")) G.vertices.emplace_back(I, sets_from_json(I->n(), c));
    }
    if (!G.vertices.empty() && static_cast<int>(G.vertices.size()) != G.order())
        throw invalid_input("graph document lists " + std::to_string(G.vertices.size()) + " collections for " +
                            std::to_string(G.order()) + " vertices");
    return G;
}

inline json cconstant_json(const CConstantGraph& H, const std::vector<KSet>& C)
{
    json out = graph_json(H.graph);
    out["codimension"] = H.codimension;
    out["constant"] = sets_json(C);
    return out;
}

inline json class_catalog_json(const DecoratedPermutation& p)
{
    json members = json::array();
    for (const auto& q : orbit(p)) members.push_back(q.str());
    return json{{"canonical", canonical_representative(p).str()},
                {"orbitSize", members.size()},
                {"members", std::move(members)}};
}

inline json decomposition_json(const GrassmannNecklace& I)
{
    auto d = decomposition_set(I);
    json chords = json::array();
    for (const auto& c : d.chords) chords.push_back({c.i, c.j});
    json parts = json::array();
    for (const auto& part : d.parts) {
        json sets = json::array();
        for (int i : part) sets.push_back(I.at(i).elements());
        parts.push_back(json{{"positions", part}, {"sets", std::move(sets)}});
    }
    return json{{"permutation", permutation_from_necklace(I).str()},
                {"prime", d.region_count() == 1},
                {"chords", std::move(chords)},
                {"parts", std::move(parts)},
                {"enclosedRegions", d.enclosed},
                {"intervalHeuristicNonprime", interval_nonprime_heuristic(permutation_from_necklace(I))}};
}

inline json class_row_json(const ClassRecord& r)
{
    return json{{"representative", r.representative.str()},
                {"n", r.n},
                {"k", r.k},
                {"interior", r.interior},
                {"prime", r.prime},
                {"mutationFriendly", r.mutation_friendly},
                {"veryMutationFriendly", r.very_mutation_friendly},
                {"order", r.order},
                {"size", r.size},
                {"certificate", r.certificate.hex()},
                {"name", r.name}};
}

inline json classify_report_json(int interior, const std::vector<ClassRecord>& rows, int catalan_max, bool pass)
{
    json classes = json::array();
    for (const auto& r : rows) classes.push_back(class_row_json(r));
    return json{{"interior", interior}, {"classes", std::move(classes)}, {"catalanMax", catalan_max}, {"pass", pass}};
}

} // namespace plab::io
