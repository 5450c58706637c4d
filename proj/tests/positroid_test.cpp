#include <gtest/gtest.h>

#include <plab/positroid.hpp>

#include "oracle.hpp"

using namespace plab;

namespace {
std::vector<std::string> necklace_text(const GrassmannNecklace& I)
{
    std::vector<std::string> out;
    for (const auto& s : I.sets()) out.push_back(compact(s));
    return out;
}
} // namespace

TEST(Necklace, FromPermutation)
{
    using V = std::vector<std::string>;
    EXPECT_EQ(necklace_text(necklace_from_permutation(parse_permutation("3412"))), (V{"12", "23", "34", "14"}));
    EXPECT_EQ(necklace_text(necklace_from_permutation(parse_permutation("312"))), (V{"12", "23", "13"}));
    EXPECT_EQ(necklace_text(necklace_from_permutation(parse_permutation("351624"))),
              (V{"124", "234", "345", "145", "156", "126"}));
}

TEST(Necklace, ToPermutation)
{
    std::vector<KSet> sets;
    for (int i = 1; i <= 9; ++i) {
        std::vector<int> e;
        for (int t = 0; t < 4; ++t) e.push_back((i - 1 + t) % 9 + 1);
        sets.emplace_back(9, e);
    }
    EXPECT_EQ(permutation_from_necklace(GrassmannNecklace(sets)).str(), "567891234");
    GrassmannNecklace gr24({KSet(4, {1, 2}), KSet(4, {2, 3}), KSet(4, {3, 4}), KSet(4, {1, 4})});
    EXPECT_EQ(permutation_from_necklace(gr24).str(), "3412");
}

TEST(Necklace, RejectsMalformedSequences)
{
    EXPECT_THROW(GrassmannNecklace({KSet(4, {1, 2}), KSet(4, {3, 4}), KSet(4, {3, 4}), KSet(4, {1, 4})}),
                 invalid_input);
    EXPECT_THROW(GrassmannNecklace({KSet(3, {1, 2}), KSet(3, {2})}), invalid_input);
    // constant necklace: every step fixes a point
    EXPECT_THROW(permutation_from_necklace(GrassmannNecklace(std::vector<KSet>(3, KSet(3, {1, 2, 3})))),
                 invalid_input);
}

TEST(Necklace, RoundTripAndOracleAgreementUpToSix)
{
    for (int n = 3; n <= 6; ++n)
        for (const auto& p : connected_permutations(n)) {
            auto I = necklace_from_permutation(p);
            ASSERT_EQ(permutation_from_necklace(I), p);
            std::vector<int> img;
            for (int i = 1; i <= n; ++i) img.push_back(p(i));
            auto want = oracle::necklace(img);
            for (int i = 1; i <= n; ++i) ASSERT_EQ(I.at(i).bits(), want[i - 1]) << p.str();
        }
}

TEST(Permutation, Parsing)
{
    EXPECT_EQ(parse_permutation("3(10)98712654").size(), 10);
    EXPECT_THROW(parse_permutation("3312"), invalid_input);
    EXPECT_THROW(parse_permutation("3512"), invalid_input);
    EXPECT_THROW(parse_permutation(""), invalid_input);
}

TEST(Permutation, Connectivity)
{
    EXPECT_TRUE(is_connected(parse_permutation("3412")));
    EXPECT_FALSE(is_connected(parse_permutation("1234")));
    EXPECT_TRUE(is_connected(parse_permutation("35124")));
    EXPECT_FALSE(is_connected(parse_permutation("2143")));
    EXPECT_THROW(necklace_from_permutation(parse_permutation("2143")), invalid_input);
}

TEST(Alignments, Examples)
{
    EXPECT_EQ(alignment_count(parse_permutation("3412")), 0);
    EXPECT_EQ(alignment_count(parse_permutation("365124")), 2);
    EXPECT_EQ(alignment_count(parse_permutation("567891234")), 0);
}

TEST(Alignments, AgreeWithOracleUpToSeven)
{
    for (int n = 3; n <= 7; ++n)
        for (const auto& p : connected_permutations(n)) {
            std::vector<int> img;
            for (int i = 1; i <= n; ++i) img.push_back(p(i));
            ASSERT_EQ(alignment_count(p), oracle::alignments(img)) << p.str();
            ASSERT_EQ(interior_size_fast(img), interior_size(p)) << p.str();
        }
}

TEST(CollectionSize, Examples)
{
    EXPECT_EQ(maximal_collection_size(parse_permutation("567891234")), 21);
    EXPECT_EQ(interior_size(parse_permutation("567891234")), 12);
    EXPECT_EQ(maximal_collection_size(parse_permutation("3412")), 5);
    EXPECT_EQ(interior_size(parse_permutation("3412")), 1);
    EXPECT_EQ(maximal_collection_size(parse_permutation("312")), 3);
    EXPECT_EQ(interior_size(parse_permutation("312")), 0);
}

TEST(Positroid, Membership)
{
    auto I = necklace_from_permutation(parse_permutation("3412"));
    PositroidView M(I);
    EXPECT_TRUE(M.contains(KSet(4, {1, 3})));
    EXPECT_TRUE(M.contains(KSet(4, {2, 4})));
    EXPECT_THROW(M.contains(KSet(4, {1, 2, 3})), invalid_input);
    EXPECT_EQ(M.elements().size(), 6u);
    EXPECT_EQ(PositroidView(necklace_from_permutation(parse_permutation("312"))).elements().size(), 3u);
    EXPECT_EQ(PositroidView(necklace_from_permutation(parse_permutation("567891234"))).elements().size(), 126u);
}

TEST(Positroid, AgreesWithOracleUpToSix)
{
    for (int n = 3; n <= 6; ++n)
        for (const auto& p : connected_permutations(n)) {
            auto I = necklace_from_permutation(p);
            std::vector<oracle::Set> sets;
            for (const auto& s : I.sets()) sets.push_back(s.bits());
            auto want = oracle::positroid(sets);
            std::vector<oracle::Set> got;
            for (const auto& s : PositroidView(I).elements()) got.push_back(s.bits());
            std::sort(got.begin(), got.end());
            ASSERT_EQ(got, want) << p.str();
        }
}

TEST(Permutations, ConnectedCounts)
{
    // frozen from the cyclic-interval scan below
    const std::size_t want[] = {0, 0, 0, 2, 7, 34, 206, 1476};
    for (int n = 3; n <= 7; ++n) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 1);
        std::size_t count = 0;
        do {
            bool ok = true;
            for (int i = 0; i < n && ok; ++i)
                for (int len = 1; len < n && ok; ++len) {
                    std::set<int> dom, im;
                    for (int t = 0; t < len; ++t) {
                        dom.insert((i + t) % n + 1);
                        im.insert(img[(i + t) % n]);
                    }
                    ok = dom != im;
                }
            count += ok;
        } while (std::next_permutation(img.begin(), img.end()));
        EXPECT_EQ(count, want[n]);
        EXPECT_EQ(connected_permutations(n).size(), want[n]);
    }
}
