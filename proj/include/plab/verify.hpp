#pragma once

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "classify.hpp"

namespace plab {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Report {
    std::vector<Check> checks;

    bool passed() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
    }
    void add(std::string name, bool ok, std::string detail = {})
    {
        checks.push_back({std::move(name), ok, std::move(detail)});
    }
};

// Prime very-mutation-friendly classes for interior sizes 0..imax, computed once per process.
class ClassTable {
public:
    explicit ClassTable(SweepOptions opt = {}) : opt_(opt) {}

    const std::vector<ClassRecord>& at(int i)
    {
        auto it = rows_.find(i);
        if (it == rows_.end()) it = rows_.emplace(i, classify_prime_vmf(i, opt_)).first;
        return it->second;
    }

    std::vector<std::vector<ClassRecord>> up_to(int imax)
    {
        std::vector<std::vector<ClassRecord>> out;
        for (int i = 1; i <= imax; ++i) out.push_back(at(i));
        return out;
    }

    std::vector<ComposedGraph> products(int i) { return compose_products(i, up_to(i)); }

private:
    SweepOptions opt_;
    std::map<int, std::vector<ClassRecord>> rows_;
};

namespace detail {
inline std::string join(const std::vector<int>& v)
{
    std::string out;
    for (int x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
    return out;
}
} // namespace detail

// Every listed row for interior size i is a computed class with the listed order and name, and
// every computed class is listed.
inline void check_listed_classes(int i, ClassTable& table, Report& rep)
{
    const auto& rows = table.at(i);
    std::map<std::string, const ClassRecord*> by_rep;
    for (const auto& r : rows) by_rep[r.representative.str()] = &r;
    std::set<std::string> hit;
    int listed = 0, found = 0, order_ok = 0, name_ok = 0;
    std::string missing;
    for (const auto& t : tables::prime_classes()) {
        if (t.interior != i) continue;
        ++listed;
        auto key = canonical_representative(parse_permutation(t.permutation)).str();
        auto it = by_rep.find(key);
        if (it == by_rep.end()) {
            if (missing.size() < 200) missing += std::string(missing.empty() ? "" : " ") + std::string(t.permutation);
            continue;
        }
        ++found;
        hit.insert(key);
        order_ok += it->second->order == t.order;
        auto names = catalog_names(it->second->certificate);
        name_ok += std::find(names.begin(), names.end(), t.name) != names.end();
    }
    std::string tag = "interior " + std::to_string(i);
    rep.add(tag + ": listed rows found among computed classes", found == listed,
            std::to_string(found) + "/" + std::to_string(listed) + (missing.empty() ? "" : " missing: " + missing));
    rep.add(tag + ": listed orders agree", order_ok == found, std::to_string(order_ok) + "/" + std::to_string(found));
    rep.add(tag + ": listed names agree", name_ok == found, std::to_string(name_ok) + "/" + std::to_string(found));
    rep.add(tag + ": every computed class is listed", hit.size() == rows.size(),
            std::to_string(hit.size()) + "/" + std::to_string(rows.size()));
    rep.add(tag + ": class count equals listed row count", static_cast<int>(rows.size()) == listed,
            "computed " + std::to_string(rows.size()) + ", listed " + std::to_string(listed) + ", distinct listed " +
                std::to_string(hit.size() + (listed - found)));
}

inline void check_exchange_orders(int i, ClassTable& table, Report& rep)
{
    auto got = distinct_orders(table.products(i));
    const auto& want = tables::exchange_graph_orders().at(i);
    rep.add("interior " + std::to_string(i) + ": exchange graph orders", got == want,
            "computed {" + detail::join(got) + "}, listed {" + detail::join(want) + "}");
}

inline Report verify_tables(int imax, ClassTable& table)
{
    Report rep;
    for (int i = 0; i <= imax; ++i) check_listed_classes(i, table, rep);
    for (int i = 0; i <= imax; ++i) check_exchange_orders(i, table, rep);
    return rep;
}

inline Report verify_catalan(int imax, ClassTable& table)
{
    Report rep;
    for (int i = 0; i <= imax; ++i) {
        auto orders = distinct_orders(table.products(i));
        auto tri = exchange_graph(triangulation_necklace(i)).order();
        auto c = catalan(i + 1);
        rep.add("interior " + std::to_string(i) + ": largest exchange graph has Catalan order",
                static_cast<std::uint64_t>(orders.back()) == c,
                "max " + std::to_string(orders.back()) + ", C_" + std::to_string(i + 1) + " = " + std::to_string(c));
        rep.add("interior " + std::to_string(i) + ": triangulation necklace reaches it", static_cast<std::uint64_t>(tri) == c,
                "order " + std::to_string(tri));
    }
    return rep;
}

// Every C-constant graph of co-dimension c <= 3 over connected permutations on up to max_n letters
// is one of the exchange graphs of interior size c.
inline Report verify_cconstant_tables(int max_n, ClassTable& table)
{
    Report rep;
    std::vector<std::set<Certificate>> allowed(4);
    for (int c = 0; c <= 3; ++c)
        for (const auto& g : table.products(c)) allowed[c].insert(g.certificate);
    std::vector<std::set<int>> orders(4);
    std::size_t checked = 0, bad = 0;
    std::string first_bad;
    for (int n = 3; n <= max_n; ++n)
        for (const auto& p : connected_permutations(n)) {
            auto G = exchange_graph(p);
            FriendlinessOracle F(G);
            std::set<std::vector<KSet>> done;
            for (const auto& V : G.vertices) {
                auto inner = V.interior();
                int m = static_cast<int>(inner.size());
                for (Mask drop = 0; drop < (Mask{1} << m); ++drop) {
                    int c = std::popcount(drop);
                    if (c > 3) continue;
                    std::vector<KSet> C;
                    for (int t = 0; t < m; ++t)
                        if (!(drop >> t & 1)) C.push_back(inner[t]);
                    if (!done.insert(C).second) continue;
                    auto fam = F.family(C);
                    std::vector<int> keep;
                    for (int v = 0; v < G.order(); ++v)
                        if (fam[v / 64] >> (v % 64) & 1) keep.push_back(v);
                    auto cert = canonical_certificate(G.topology.induced(keep));
                    ++checked;
                    orders[c].insert(cert.order);
                    if (!allowed[c].count(cert)) {
                        ++bad;
                        if (first_bad.empty()) first_bad = p.str() + " co-dimension " + std::to_string(c);
                    }
                    if (!is_connected(G.topology.induced(keep))) {
                        ++bad;
                        if (first_bad.empty()) first_bad = p.str() + " disconnected C-constant graph";
                    }
                }
            }
        }
    rep.add("C-constant graphs are connected exchange graphs of matching interior size", bad == 0,
            std::to_string(checked) + " families on up to " + std::to_string(max_n) + " letters" +
                (first_bad.empty() ? "" : ", first failure " + first_bad));
    for (int c = 0; c <= 3; ++c) {
        std::vector<int> got(orders[c].begin(), orders[c].end());
        const auto& want = tables::exchange_graph_orders().at(c);
        bool inside = std::includes(want.begin(), want.end(), got.begin(), got.end());
        rep.add("co-dimension " + std::to_string(c) + ": C-constant graph orders are listed orders", inside,
                "seen {" + detail::join(got) + "}, listed {" + detail::join(want) + "}");
    }
    return rep;
}

// Tree-shaped very-mutation-friendly graphs are paths, one class per interior size; cycles come
// only from 312, 3412, 34512 and the product B□B realised by 351624.
inline Report verify_tree_cycle_theorems(int imax, ClassTable& table)
{
    Report rep;
    static const char* path_classes[] = {"312", "3412", "365124", "38761254", "3(10)98712654"};
    for (int i = 0; i <= imax && i <= 4; ++i) {
        std::vector<std::string> trees, paths, cycles;
        for (const auto& r : table.at(i)) {
            auto g = exchange_graph(r.representative).topology;
            auto s = shape(g);
            if (s.kind == Shape::tree) trees.push_back(r.representative.str());
            if (s.kind == Shape::path) paths.push_back(r.representative.str());
            if (s.kind == Shape::cycle || g.order() <= 2) cycles.push_back(r.representative.str());
        }
        auto want = canonical_representative(parse_permutation(path_classes[i])).str();
        rep.add("interior " + std::to_string(i) + ": no tree that is not a path", trees.empty(),
                trees.empty() ? "" : trees.front());
        rep.add("interior " + std::to_string(i) + ": the only path class is " + path_classes[i],
                paths.size() == 1 && paths.front() == want, std::to_string(paths.size()) + " path classes");
        std::set<std::string> ok;
        for (auto s : {"312", "3412", "34512"}) ok.insert(canonical_representative(parse_permutation(s)).str());
        bool cyc = std::all_of(cycles.begin(), cycles.end(), [&](const std::string& s) { return ok.count(s); });
        rep.add("interior " + std::to_string(i) + ": prime cycles come from 312, 3412, 34512", cyc,
                std::to_string(cycles.size()) + " cycle classes");
        int prod_trees = 0, prod_cycles = 0;
        for (const auto& g : table.products(i)) {
            if (g.name.find("□") == std::string::npos) continue;
            auto s = shape(g.graph);
            prod_trees += s.kind == Shape::tree || s.kind == Shape::path;
            if (s.kind == Shape::cycle && g.graph.order() != 4) ++prod_cycles;
        }
        rep.add("interior " + std::to_string(i) + ": products are neither trees nor cycles other than B□B",
                prod_trees == 0 && prod_cycles == 0);
    }
    auto p = parse_permutation("351624");
    auto G = exchange_graph(p);
    rep.add("351624 is non-prime, very mutation friendly, with a 4-cycle exchange graph",
            !is_prime(necklace_from_permutation(p)) && is_very_mutation_friendly(G) &&
                shape(G.topology) == Shape{Shape::cycle, 4});
    return rep;
}

} // namespace plab
