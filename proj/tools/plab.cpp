// plab: command-line front end for the positroid library.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <plab/io/cache.hpp>
#include <plab/io/emit.hpp>
#include <plab/io/json.hpp>
#include <plab/tiling.hpp>
#include <plab/verify.hpp>

namespace {

using namespace plab;
using io::json;

constexpr int exit_pass = 0, exit_fail = 1, exit_usage = 2;

struct Options {
    std::string perm, necklace_text, drop, verify_what, svg_path;
    bool dot = false, as_json = false, csv = false, full_sweep = false, no_cache = false;
    int collection = 1, interior = -1, interior_max = -1, jobs = 1, max_n = -1;
    std::size_t budget = default_vertex_budget, search_budget = default_search_budget;
};

DecoratedPermutation read_perm(const std::string& text)
{
    auto p = parse_permutation(text);
    require_connected(p);
    return p;
}

ExchangeGraph enumerate_cached(const DecoratedPermutation& p, const Options& o)
{
    auto cache = io::Cache::from_environment();
    std::string key = "exchange-graph:" + p.str();
    if (!o.no_cache)
        if (auto hit = cache.get(key)) return io::graph_from_json(hit->value);
    auto start = std::chrono::steady_clock::now();
    auto G = exchange_graph(p, o.budget);
    if (!o.no_cache) {
        auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        cache.put({key, io::graph_json(G), json{{"enumerateMs", ms}}});
    }
    return G;
}

const WSCollection& pick_collection(const ExchangeGraph& G, int idx)
{
    if (idx < 1 || idx > G.order())
        throw invalid_input("collection index " + std::to_string(idx) + " out of range 1.." + std::to_string(G.order()));
    return G.vertices[idx - 1];
}

std::string set_list(const std::vector<KSet>& sets)
{
    std::string out;
    for (const auto& s : sets) out += (out.empty() ? "" : " ") + compact(s);
    return out;
}

int cmd_necklace(const Options& o)
{
    auto p = read_perm(o.perm);
    auto I = necklace_from_permutation(p);
    if (o.as_json) {
        auto j = io::necklace_json(I);
        j["permutation"] = p.str();
        j["interior"] = interior_size(p);
        std::cout << j.dump(2) << '\n';
        return exit_pass;
    }
    std::cout << "permutation " << p.str() << "\nn " << I.n() << "  k " << I.k() << "  alignments "
              << alignment_count(p) << "  collection size " << maximal_collection_size(p) << "  interior "
              << interior_size(p) << '\n';
    for (int i = 1; i <= I.n(); ++i) std::cout << "I" << i << " = " << compact(I.at(i)) << '\n';
    return exit_pass;
}

int cmd_perm(const Options& o)
{
    std::string text = o.necklace_text;
    if (text == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    }
    auto I = io::parse_necklace_json(text);
    std::cout << permutation_from_necklace(I).str() << '\n';
    return exit_pass;
}

int cmd_enumerate(const Options& o)
{
    auto G = enumerate_cached(read_perm(o.perm), o);
    if (o.dot) {
        std::cout << io::emit_dot(G);
    } else if (o.as_json) {
        std::cout << io::graph_json(G).dump(2) << '\n';
    } else {
        auto cert = canonical_certificate(G.topology);
        auto name = catalog_name(cert);
        std::cout << "order " << G.order() << "  size " << G.size() << "  shape " << shape(G.topology).str()
                  << "  graph " << (name.empty() ? "-" : name) << '\n';
        for (const auto& line : io::adjacency_lines(G.topology)) std::cout << line << '\n';
        for (int v = 0; v < G.order(); ++v) std::cout << v + 1 << ": " << set_list(G.vertices[v].sets()) << '\n';
    }
    return exit_pass;
}

int cmd_tiling(const Options& o)
{
    auto G = enumerate_cached(read_perm(o.perm), o);
    Tiling T(pick_collection(G, o.collection));
    auto svg = io::emit_svg(T);
    if (o.svg_path.empty() || o.svg_path == "-") {
        std::cout << svg;
        return exit_pass;
    }
    std::ofstream out(o.svg_path, std::ios::binary);
    if (!out || !(out << svg)) throw std::runtime_error("cannot write " + o.svg_path);
    std::cout << "collection " << o.collection << ": " << T.collection().size() << " sets, " << T.white_faces().size()
              << " white faces, " << T.black_faces().size() << " black faces -> " << o.svg_path << '\n';
    return exit_pass;
}

int cmd_equiv(const Options& o)
{
    auto j = io::class_catalog_json(read_perm(o.perm));
    if (o.as_json) {
        std::cout << j.dump(2) << '\n';
        return exit_pass;
    }
    std::cout << "canonical " << j["canonical"].get<std::string>() << "\norbit size " << j["orbitSize"].get<int>()
              << '\n';
    for (const auto& m : j["members"]) std::cout << m.get<std::string>() << '\n';
    return exit_pass;
}

int cmd_decompose(const Options& o)
{
    auto I = necklace_from_permutation(read_perm(o.perm));
    auto j = io::decomposition_json(I);
    if (o.as_json) {
        std::cout << j.dump(2) << '\n';
        return exit_pass;
    }
    std::cout << (j["prime"].get<bool>() ? "prime" : "not prime") << '\n';
    std::cout << "chords";
    for (const auto& c : j["chords"]) std::cout << " (" << c[0].get<int>() << "," << c[1].get<int>() << ")";
    std::cout << '\n';
    for (const auto& part : j["parts"]) {
        std::vector<KSet> sets;
        for (const auto& s : part["sets"]) sets.emplace_back(I.n(), s.get<std::vector<int>>());
        std::cout << "part " << set_list(sets) << '\n';
    }
    if (j["enclosedRegions"].get<int>() > 0) std::cout << "enclosed regions " << j["enclosedRegions"] << '\n';
    std::cout << "interval heuristic " << (j["intervalHeuristicNonprime"].get<bool>() ? "not prime" : "prime") << '\n';
    return exit_pass;
}

SweepOptions sweep_options(const Options& o)
{
    SweepOptions s;
    s.max_n = o.max_n;
    s.jobs = o.jobs;
    s.vertex_budget = o.budget;
    s.search_budget = o.search_budget;
    return s;
}

int cmd_classify(const Options& o)
{
    if (o.interior < 0) throw invalid_input("interior size must be nonnegative");
    if (o.interior >= 4 && !o.full_sweep)
        throw invalid_input("interior size " + std::to_string(o.interior) + " sweeps up to " +
                            std::to_string(default_max_n(o.interior)) + " letters; pass --full-sweep to run it");
    ClassTable table(sweep_options(o));
    const auto& rows = table.at(o.interior);
    Report rep;
    check_listed_classes(o.interior, table, rep);
    auto orders = distinct_orders(table.products(o.interior));
    int catalan_max = orders.empty() ? 0 : orders.back();
    // the row-count line is informational: the listing may repeat a class
    bool pass = true;
    for (const auto& c : rep.checks)
        if (c.name.find("class count") == std::string::npos) pass = pass && c.passed;
    pass = pass && static_cast<std::uint64_t>(catalan_max) == catalan(o.interior + 1);

    if (o.csv) {
        std::cout << io::emit_csv(rows);
    } else if (o.as_json) {
        std::cout << io::classify_report_json(o.interior, rows, catalan_max, pass).dump(2) << '\n';
    } else {
        std::printf("%-14s %-18s %-6s %s\n", "interior size", "class", "order", "graph");
        for (const auto& r : rows)
            std::printf("%-14d %-18s %-6d %s\n", r.interior, r.representative.str().c_str(), r.order,
                        r.name.empty() ? "-" : r.name.c_str());
        for (const auto& c : rep.checks)
            std::printf("%s %s%s\n", c.passed ? "ok  " : "diff", c.name.c_str(),
                        c.detail.empty() ? "" : (" (" + c.detail + ")").c_str());
        std::printf("largest product order %d\n%s\n", catalan_max, pass ? "PASS" : "FAIL");
    }
    return pass ? exit_pass : exit_fail;
}

std::vector<KSet> parse_drop(int n, const std::string& text)
{
    std::vector<KSet> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        if (item.find_first_not_of(" ") == std::string::npos) continue;
        out.push_back(parse_kset(n, item));
    }
    if (out.empty()) throw invalid_input("--drop needs at least one set");
    return out;
}

int cmd_cconstant(const Options& o)
{
    auto p = read_perm(o.perm);
    auto G = enumerate_cached(p, o);
    const auto& V = pick_collection(G, o.collection);
    auto drop = parse_drop(p.size(), o.drop);
    for (const auto& s : drop) {
        if (!V.contains(s)) throw invalid_input("set " + compact(s) + " is not in collection " + std::to_string(o.collection));
        if (V.necklace().contains(s)) throw invalid_input("set " + compact(s) + " is a necklace set and is always present");
    }
    std::vector<KSet> C;
    for (const auto& s : V.sets())
        if (std::find(drop.begin(), drop.end(), s) == drop.end()) C.push_back(s);
    auto H = cconstant_graph(G, C);
    if (o.as_json) {
        std::cout << io::cconstant_json(H, C).dump(2) << '\n';
        return exit_pass;
    }
    auto name = catalog_name(canonical_certificate(H.graph.topology));
    std::cout << "co-dimension " << H.codimension << "  order " << H.graph.order() << "  size " << H.graph.size()
              << "  graph " << (name.empty() ? "-" : name) << '\n';
    std::cout << "constant " << set_list(C) << '\n';
    for (const auto& line : io::adjacency_lines(H.graph.topology)) std::cout << line << '\n';
    return exit_pass;
}

int cmd_verify(const Options& o)
{
    ClassTable table(sweep_options(o));
    Report rep;
    int imax = o.interior_max;
    if (o.verify_what == "tables") {
        if (imax < 0) imax = 3;
        if (imax >= 4 && !o.full_sweep) throw invalid_input("--interior-max 4 needs --full-sweep");
        rep = verify_tables(imax, table);
    } else if (o.verify_what == "catalan") {
        if (imax < 0) imax = 3;
        if (imax >= 4 && !o.full_sweep) throw invalid_input("--interior-max 4 needs --full-sweep");
        rep = verify_catalan(imax, table);
        std::string maxima;
        for (int i = 0; i <= imax; ++i)
            maxima += (maxima.empty() ? "" : ",") + std::to_string(distinct_orders(table.products(i)).back());
        std::cout << "maxima " << maxima << '\n';
    } else if (o.verify_what == "theorems") {
        if (imax < 0) imax = 3;
        if (imax >= 4 && !o.full_sweep) throw invalid_input("--interior-max 4 needs --full-sweep");
        rep = verify_tree_cycle_theorems(imax, table);
    } else if (o.verify_what == "cconstant") {
        rep = verify_cconstant_tables(6, table);
    } else {
        throw invalid_input("unknown verification '" + o.verify_what + "'");
    }
    for (const auto& c : rep.checks)
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")")
                  << '\n';
    return rep.passed() ? exit_pass : exit_fail;
}

} // namespace

int main(int argc, char** argv)
{
    Options o;
    CLI::App app{"Weakly separated collections, exchange graphs and their classification"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    auto budget = [&](CLI::App* c) {
        c->add_option("--budget", o.budget, "Vertex budget for exchange graph enumeration");
        c->add_flag("--no-cache", o.no_cache, "Skip the enumeration cache");
    };

    auto* necklace = app.add_subcommand("necklace", "Grassmann necklace of a decorated permutation");
    necklace->add_option("perm", o.perm)->required();
    necklace->add_flag("--json", o.as_json);

    auto* perm = app.add_subcommand("perm", "Decorated permutation of a necklace given as JSON ('-' reads stdin)");
    perm->add_option("necklace-json", o.necklace_text)->required();

    auto* enumerate = app.add_subcommand("enumerate", "Exchange graph of a permutation");
    enumerate->add_option("perm", o.perm)->required();
    auto* dot = enumerate->add_flag("--dot", o.dot);
    enumerate->add_flag("--json", o.as_json)->excludes(dot);
    budget(enumerate);

    auto* tiling = app.add_subcommand("tiling", "Plabic tiling of one collection as SVG");
    tiling->add_option("perm", o.perm)->required();
    tiling->add_option("--collection", o.collection, "1-based index into the exchange graph")->capture_default_str();
    tiling->add_option("--svg", o.svg_path, "Output file, '-' for stdout")->required();
    budget(tiling);

    auto* equiv = app.add_subcommand("equiv", "Equivalence class of a permutation");
    equiv->add_option("perm", o.perm)->required();
    equiv->add_flag("--json", o.as_json);

    auto* decompose = app.add_subcommand("decompose", "Decomposition set and primality");
    decompose->add_option("perm", o.perm)->required();
    decompose->add_flag("--json", o.as_json);

    auto* classify = app.add_subcommand("classify", "Prime very-mutation-friendly classes of one interior size");
    classify->add_option("--interior", o.interior)->required();
    classify->add_flag("--full-sweep", o.full_sweep, "Allow interior size 4 and above");
    classify->add_option("--jobs", o.jobs)->check(CLI::Range(1, 256))->capture_default_str();
    classify->add_option("--max-n", o.max_n, "Largest n swept (default 2i+2)");
    classify->add_option("--search-budget", o.search_budget);
    auto* csv = classify->add_flag("--csv", o.csv);
    classify->add_flag("--json", o.as_json)->excludes(csv);
    budget(classify);

    auto* cconstant = app.add_subcommand("cconstant", "C-constant graph: a collection with some sets released");
    cconstant->add_option("perm", o.perm)->required();
    cconstant->add_option("--drop", o.drop, "Comma-separated sets to release, e.g. 13,24")->required();
    cconstant->add_option("--collection", o.collection)->capture_default_str();
    cconstant->add_flag("--json", o.as_json);
    budget(cconstant);

    auto* verify = app.add_subcommand("verify", "Check computed tables and theorems");
    verify->add_option("what", o.verify_what)->required()->check(CLI::IsMember({"tables", "catalan", "theorems", "cconstant"}));
    verify->add_option("--interior-max", o.interior_max);
    verify->add_flag("--full-sweep", o.full_sweep);
    verify->add_option("--jobs", o.jobs)->check(CLI::Range(1, 256))->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*necklace) return cmd_necklace(o);
        if (*perm) return cmd_perm(o);
        if (*enumerate) return cmd_enumerate(o);
        if (*tiling) return cmd_tiling(o);
        if (*equiv) return cmd_equiv(o);
        if (*decompose) return cmd_decompose(o);
        if (*classify) return cmd_classify(o);
        if (*cconstant) return cmd_cconstant(o);
        if (*verify) return cmd_verify(o);
    } catch (const invalid_input& e) {
        std::cerr << "error: invalid input: " << e.what() << '\n';
        return exit_usage;
    } catch (const budget_exceeded& e) {
        std::cerr << "error: budget exceeded: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
