#include <gtest/gtest.h>

#include <filesystem>
#include <regex>

#include <plab/io/cache.hpp>
#include <plab/io/emit.hpp>
#include <plab/io/json.hpp>

#include "fixtures.hpp"

using namespace plab;
using io::json;

namespace {

std::size_t count(const std::string& text, const std::string& needle)
{
    std::size_t c = 0;
    for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++c;
    return c;
}

class TempDir {
public:
    TempDir()
    {
        auto base = std::filesystem::temp_directory_path() / "plab-test-cache";
        path_ = base / std::to_string(::getpid());
        std::filesystem::remove_all(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

} // namespace

TEST(Json, NecklaceRoundTrip)
{
    auto I = necklace_from_permutation(parse_permutation("351624"));
    auto doc = io::necklace_json(I);
    EXPECT_EQ(io::necklace_from_json(json::parse(doc.dump())), I);
    EXPECT_EQ(permutation_from_necklace(io::parse_necklace_json("[[1,2],[2,3],[3,4],[1,4]]")).str(), "3412");
    EXPECT_THROW(io::parse_necklace_json("[[1,2],[2,3"), invalid_input);
    EXPECT_THROW(io::parse_necklace_json("{\"n\": 3, \"necklace\": [[1,2],[2,3],[3,4],[1,4]]}"), invalid_input);
}

TEST(Json, CollectionDocument)
{
    auto doc = io::collection_json(fixtures::gr24_collection());
    EXPECT_EQ(doc["n"], 4);
    EXPECT_EQ(doc["k"], 2);
    EXPECT_EQ(doc["sets"].size(), 5u);
    EXPECT_EQ(doc["sets"][0], json::parse("[1,2]"));
}

TEST(Json, GraphDocumentRoundTrips)
{
    for (auto p : {"312", "3412", "34512", "345612", "3461725"}) {
        auto G = exchange_graph(parse_permutation(p));
        auto doc = io::graph_json(G);
        auto text = doc.dump();
        auto back = io::graph_from_json(json::parse(text));
        EXPECT_EQ(back.vertices, G.vertices) << p;
        EXPECT_EQ(back.topology.edges(), G.topology.edges()) << p;
        EXPECT_EQ(io::graph_json(back).dump(), text) << p;
    }
}

TEST(Json, TwoVertexGraphDocument)
{
    auto doc = io::graph_json(exchange_graph(parse_permutation("3412")));
    EXPECT_EQ(doc["order"], 2);
    EXPECT_EQ(doc["size"], 1);
    EXPECT_EQ(doc["adjacency"], json::parse(R"(["1 → 2", "2 → 1"])"));
}

TEST(Json, AdjacencyLinesWithManyVertices)
{
    auto G = exchange_graph(parse_permutation("345612")).topology;
    auto lines = io::adjacency_lines(G);
    EXPECT_EQ(io::graph_from_adjacency_lines(lines).edges(), G.edges());
    EXPECT_THROW(io::graph_from_adjacency_lines({"1 - 2"}), invalid_input);
    EXPECT_EQ(io::graph_from_adjacency_lines({"1 →"}).order(), 1);
}

TEST(Json, ClassCatalogAndDecomposition)
{
    auto doc = io::class_catalog_json(parse_permutation("365124"));
    EXPECT_EQ(doc["canonical"], "356214");
    EXPECT_EQ(doc["orbitSize"], doc["members"].size());
    auto d = io::decomposition_json(necklace_from_permutation(parse_permutation("351624")));
    EXPECT_FALSE(d["prime"].get<bool>());
    EXPECT_EQ(d["chords"], json::parse("[[1,4]]"));
    EXPECT_EQ(json::parse(d.dump()), d);
}

TEST(Json, ClassifyReportRoundTrips)
{
    auto rows = classify_prime_vmf(2);
    auto doc = io::classify_report_json(2, rows, 5, true);
    EXPECT_EQ(doc["interior"], 2);
    EXPECT_EQ(doc["classes"].size(), 2u);
    EXPECT_EQ(doc["classes"][0]["name"], "D");
    EXPECT_EQ(json::parse(doc.dump()), doc);
}

TEST(Dot, EmptyGraphIsValid)
{
    EXPECT_EQ(io::emit_dot(Graph(0)), "graph G {\n}\n");
}

TEST(Dot, LabelsAndTooltips)
{
    auto dot = io::emit_dot(exchange_graph(parse_permutation("34512")));
    EXPECT_EQ(count(dot, " -- "), 5u);
    EXPECT_EQ(count(dot, "tooltip="), 5u);
    EXPECT_NE(dot.find("1 [label=\"1\""), std::string::npos);
}

TEST(Svg, Gr24Tiling)
{
    auto svg = io::emit_svg(Tiling(fixtures::gr24_collection()));
    EXPECT_EQ(count(svg, "<circle"), 5u);
    EXPECT_EQ(count(svg, "<polygon"), 4u);
    EXPECT_EQ(count(svg, "class=\"face white\""), 2u);
    EXPECT_EQ(count(svg, "class=\"face black\""), 2u);
    std::regex poly("points=\"([^\"]*)\"");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), poly); it != std::sregex_iterator(); ++it)
        EXPECT_EQ(count((*it)[1].str(), ","), 3u);
    for (auto label : {">12<", ">13<", ">23<", ">34<", ">14<"}) EXPECT_NE(svg.find(label), std::string::npos);
    EXPECT_EQ(svg, io::emit_svg(Tiling(fixtures::gr24_collection())));
}

TEST(Svg, NineSetExampleCounts)
{
    Tiling T(fixtures::top_gr49_collection());
    auto svg = io::emit_svg(T);
    EXPECT_EQ(count(svg, "<circle"), 21u);
    EXPECT_EQ(count(svg, "<polygon"), T.faces().size());
}

TEST(Csv, HeaderAndRows)
{
    auto csv = io::emit_csv(classify_prime_vmf(2));
    EXPECT_EQ(csv, "Interior Size,Equivalence Class,Exchange Graph Order,Exchange Graph\n"
                   "2,34512,5,D\n"
                   "2,356214,3,C\n");
    ClassRecord odd;
    odd.representative = parse_permutation("312");
    odd.name = "a,b";
    EXPECT_NE(io::emit_csv({odd}).find("\"a,b\""), std::string::npos);
}

TEST(Cache, PutThenGet)
{
    TempDir dir;
    io::Cache cache(dir.path());
    EXPECT_FALSE(cache.get("3412").has_value());
    auto G = exchange_graph(parse_permutation("3412"));
    cache.put({"3412", io::graph_json(G), json{{"enumerateMs", 1.5}}});
    auto hit = cache.get("3412");
    ASSERT_TRUE(hit.has_value());
    EXPECT_EQ(hit->value, io::graph_json(G));
    EXPECT_EQ(io::graph_from_json(hit->value).vertices, G.vertices);
    EXPECT_FALSE(cache.get("34512").has_value());
}

TEST(Cache, VersionMismatchIsAMiss)
{
    TempDir dir;
    io::Cache cache(dir.path());
    io::CacheEntry e{"312", json{{"order", 1}}};
    e.format_version = io::cache_format_version + 1;
    cache.put(e);
    EXPECT_TRUE(std::filesystem::exists(cache.path_for("312")));
    EXPECT_FALSE(cache.get("312").has_value());
}

TEST(Cache, CorruptOrForeignFilesAreMisses)
{
    TempDir dir;
    io::Cache cache(dir.path());
    std::filesystem::create_directories(dir.path());
    std::ofstream(cache.path_for("231")) << "{not json";
    EXPECT_FALSE(cache.get("231").has_value());
    std::ofstream(cache.path_for("312")) << json{{"formatVersion", io::cache_format_version}, {"key", "other"}, {"value", 1}}.dump();
    EXPECT_FALSE(cache.get("312").has_value());
}

TEST(Cache, ConcurrentWritersLeaveAWholeEntry)
{
    TempDir dir;
    io::Cache cache(dir.path());
    auto value = io::graph_json(exchange_graph(parse_permutation("345612")));
    std::vector<std::thread> pool;
    for (int t = 0; t < 8; ++t)
        pool.emplace_back([&] {
            for (int r = 0; r < 10; ++r) cache.put({"345612", value});
        });
    for (auto& th : pool) th.join();
    auto hit = cache.get("345612");
    ASSERT_TRUE(hit.has_value());
    EXPECT_EQ(hit->value, value);
    int files = 0;
    for (const auto& f : std::filesystem::directory_iterator(dir.path())) files += f.is_regular_file();
    EXPECT_EQ(files, 1);
}

TEST(Cache, DirectoryFromEnvironment)
{
    ::setenv("POSITROID_LAB_CACHE", "/tmp/somewhere", 1);
    EXPECT_EQ(io::Cache::from_environment().directory(), "/tmp/somewhere");
    ::unsetenv("POSITROID_LAB_CACHE");
    EXPECT_EQ(io::Cache::from_environment().directory(), ".plab-cache");
}

TEST(Cache, FnvIsStable)
{
    EXPECT_EQ(io::fnv1a(""), 14695981039346656037ull);
    EXPECT_EQ(io::fnv1a("a"), 0xaf63dc4c8601ec8cull);
}
