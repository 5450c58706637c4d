#include <gtest/gtest.h>

#include <plab/catalog.hpp>
#include <plab/exchange.hpp>

#include "oracle.hpp"

using namespace plab;

namespace {

Graph cycle(int n)
{
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path(int n)
{
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph relabel(const Graph& g, const std::vector<int>& p)
{
    Graph h(g.order());
    for (auto [u, v] : g.edges()) h.add_edge(p[u], p[v]);
    return h;
}

int order_of(const char* perm) { return exchange_graph(parse_permutation(perm)).order(); }

} // namespace

TEST(Graph, BasicOperations)
{
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 0);
    EXPECT_EQ(g.size(), 1);
    EXPECT_THROW(g.add_edge(1, 1), invalid_input);
    EXPECT_THROW(g.add_edge(0, 3), invalid_input);
    EXPECT_EQ(component_count(g), 2);
    EXPECT_TRUE(is_connected(Graph(0)));
    auto h = cycle(5).induced({0, 1, 2});
    EXPECT_EQ(h.size(), 2);
}

TEST(Graph, Shapes)
{
    EXPECT_EQ(shape(Graph(1)), (Shape{Shape::path, 1}));
    EXPECT_EQ(shape(path(2)), (Shape{Shape::path, 2}));
    EXPECT_EQ(shape(cycle(5)), (Shape{Shape::cycle, 5}));
    Graph star(4);
    for (int v = 1; v < 4; ++v) star.add_edge(0, v);
    EXPECT_EQ(shape(star).kind, Shape::tree);
    EXPECT_EQ(shape(cartesian_product(cycle(3), path(2))).kind, Shape::other);
}

TEST(Graph, CartesianProducts)
{
    auto sq = cartesian_product(path(2), path(2));
    EXPECT_EQ(shape(sq), (Shape{Shape::cycle, 4}));
    EXPECT_TRUE(isomorphic(cartesian_product(Graph(1), cycle(5)), cycle(5)));
    EXPECT_EQ(cartesian_product(path(2), cycle(5)).order(), 10);
    EXPECT_EQ(cartesian_product(path(2), cycle(5)).size(), 15);
}

TEST(Certificate, InvariantUnderRelabelling)
{
    EXPECT_EQ(canonical_certificate(cycle(5)), canonical_certificate(relabel(cycle(5), {2, 4, 1, 3, 0})));
    EXPECT_NE(canonical_certificate(path(3)), canonical_certificate(cycle(3)));
    auto I = catalog_graph("I").graph;
    std::vector<int> p(I.order());
    for (int v = 0; v < I.order(); ++v) p[v] = (5 * v + 3) % I.order();
    EXPECT_EQ(canonical_certificate(I), canonical_certificate(relabel(I, p)));
}

TEST(Certificate, AgreesWithBruteForceIsomorphismOnSmallGraphs)
{
    // every graph on five vertices against a fixed relabelling of every other
    const int n = 5;
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
    std::vector<Graph> all;
    for (unsigned m = 0; m < (1u << slots.size()); m += 7) {
        Graph g(n);
        for (std::size_t t = 0; t < slots.size(); ++t)
            if (m >> t & 1) g.add_edge(slots[t].first, slots[t].second);
        all.push_back(g);
    }
    for (std::size_t a = 0; a < all.size(); ++a)
        for (std::size_t b = a; b < all.size(); b += 3) {
            bool want = oracle::isomorphic(n, oracle::normalise(all[a].edges()), oracle::normalise(all[b].edges()));
            ASSERT_EQ(isomorphic(all[a], all[b]), want) << a << " " << b;
        }
}

TEST(ExchangeGraph, NamedOrders)
{
    EXPECT_EQ(order_of("312"), 1);
    EXPECT_EQ(order_of("3412"), 2);
    EXPECT_EQ(order_of("345612"), 14);
    EXPECT_TRUE(isomorphic(exchange_graph(parse_permutation("345612")).topology, catalog_graph("I").graph));
    EXPECT_EQ(shape(exchange_graph(parse_permutation("34512")).topology), (Shape{Shape::cycle, 5}));
    EXPECT_EQ(shape(exchange_graph(parse_permutation("351624")).topology), (Shape{Shape::cycle, 4}));
}

TEST(ExchangeGraph, LargeTopCell)
{
    auto G = exchange_graph(parse_permutation("567891234"));
    EXPECT_EQ(G.order(), 122361);
    EXPECT_EQ(G.vertices.front().size(), 21);
}

TEST(ExchangeGraph, BudgetIsEnforced)
{
    EXPECT_THROW(exchange_graph(parse_permutation("345612"), 10), budget_exceeded);
}

TEST(ExchangeGraph, VerticesAreCanonicallyOrdered)
{
    auto G = exchange_graph(parse_permutation("3456712"));
    for (int v = 1; v < G.order(); ++v) ASSERT_LT(G.vertices[v - 1].key(), G.vertices[v].key());
}

TEST(BruteForce, CollectionCounts)
{
    EXPECT_EQ(brute_force_maximal_collections(necklace_from_permutation(parse_permutation("3412"))).size(), 2u);
    EXPECT_EQ(brute_force_maximal_collections(necklace_from_permutation(parse_permutation("312"))).size(), 1u);
    EXPECT_EQ(brute_force_maximal_collections(necklace_from_permutation(parse_permutation("34512"))).size(), 5u);
}

TEST(CConstant, Examples)
{
    auto p = parse_permutation("3412");
    auto I = necklace_from_permutation(p);
    auto G = exchange_graph(p);
    auto whole = cconstant_graph(G, I.sets());
    EXPECT_EQ(whole.graph.order(), G.order());
    EXPECT_EQ(whole.codimension, 1);
    auto point = cconstant_graph(G, G.vertices.front().sets());
    EXPECT_EQ(point.graph.order(), 1);
    EXPECT_EQ(point.codimension, 0);
    EXPECT_THROW(cconstant_graph(G, {KSet(4, {1, 3}), KSet(4, {2, 4})}), invalid_input);
}

TEST(CConstant, CodimensionOneIsAPointOrAnEdge)
{
    for (int n = 3; n <= 6; ++n)
        for (const auto& p : connected_permutations(n)) {
            auto G = exchange_graph(p);
            for (const auto& V : G.vertices)
                for (const auto& drop : V.interior()) {
                    std::vector<KSet> C;
                    for (const auto& s : V.sets())
                        if (s != drop) C.push_back(s);
                    auto H = cconstant_graph(G, C);
                    ASSERT_EQ(H.codimension, 1);
                    ASSERT_TRUE(H.graph.order() == 1 || H.graph.order() == 2) << p.str();
                    ASSERT_EQ(H.graph.size(), H.graph.order() - 1);
                }
        }
}

TEST(Catalog, CertificatesAreDistinctAndOrdered)
{
    const auto& cat = graph_catalog();
    std::set<Certificate> certs;
    for (const auto& g : cat) certs.insert(g.certificate);
    EXPECT_EQ(certs.size(), cat.size());
    EXPECT_EQ(catalog_graph("A").graph.order(), 1);
    EXPECT_EQ(catalog_graph("B").graph.order(), 2);
    EXPECT_EQ(shape(catalog_graph("C").graph), (Shape{Shape::path, 3}));
    EXPECT_EQ(shape(catalog_graph("D").graph), (Shape{Shape::cycle, 5}));
    EXPECT_EQ(shape(catalog_graph("E").graph), (Shape{Shape::path, 4}));
    EXPECT_EQ(shape(catalog_graph("J").graph), (Shape{Shape::path, 5}));
    EXPECT_EQ(catalog_graph("Z6").graph.order(), 42);
    EXPECT_THROW(catalog_graph("Q9"), invalid_input);
}

TEST(Catalog, ListingParser)
{
    auto g = graph_from_listing("1:2,3;2:1;3:1");
    EXPECT_EQ(g.order(), 3);
    EXPECT_EQ(g.size(), 2);
    EXPECT_THROW(graph_from_listing("1-2"), invalid_input);
    EXPECT_THROW(graph_from_listing("1:x"), invalid_input);
}
