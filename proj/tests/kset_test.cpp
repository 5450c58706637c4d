#include <gtest/gtest.h>

#include <plab/kset.hpp>

#include "oracle.hpp"

using namespace plab;

TEST(CyclicOrder, RotationsOfIncreasingSequences)
{
    EXPECT_TRUE(cyclically_ordered({1, 2, 3}));
    EXPECT_TRUE(cyclically_ordered({3, 1, 2}));
    EXPECT_FALSE(cyclically_ordered({1, 3, 4, 2}));
    EXPECT_TRUE(cyclically_ordered({}));
    EXPECT_THROW(cyclically_ordered({1, 2, 1}), invalid_input);
}

TEST(CyclicOrder, AgreesWithOracleOnAllFourTuples)
{
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= 5; ++b)
            for (int c = 1; c <= 5; ++c)
                for (int d = 1; d <= 5; ++d) {
                    std::set<int> s{a, b, c, d};
                    if (s.size() != 4) continue;
                    EXPECT_EQ(cyclically_ordered({a, b, c, d}), oracle::cyclic4(a, b, c, d));
                }
}

TEST(CyclicSort, AnchorsTheOrder)
{
    EXPECT_EQ(cyclic_sort(2, KSet(4, {1, 3})), (std::vector<int>{3, 1}));
    EXPECT_EQ(cyclic_sort(1, KSet(4, {2, 4})), (std::vector<int>{2, 4}));
    EXPECT_EQ(cyclic_sort(4, KSet(4, {1, 3})), (std::vector<int>{1, 3}));
}

TEST(KSetText, ParsesAndPrintsTwoDigitLabels)
{
    auto s = parse_kset(10, "3(10)");
    EXPECT_EQ(s.elements(), (std::vector<int>{3, 10}));
    EXPECT_EQ(compact(s), "3(10)");
    EXPECT_EQ(to_string(s), "3 (10)");
    EXPECT_EQ(parse_kset(9, "1 2 4 9"), parse_kset(9, "1249"));
    EXPECT_THROW(parse_kset(9, "12a"), invalid_input);
    EXPECT_THROW(parse_kset(4, "15"), invalid_input);
    EXPECT_THROW(parse_kset(4, "(3"), invalid_input);
}

TEST(KSet, RejectsDuplicatesAndOutOfRange)
{
    EXPECT_THROW(KSet(4, {1, 1}), invalid_input);
    EXPECT_THROW(KSet(4, {0}), invalid_input);
    EXPECT_THROW(KSet(33, Mask{1}), invalid_input);
}

TEST(WeakSeparation, Examples)
{
    EXPECT_FALSE(weakly_separated(KSet(4, {1, 3}), KSet(4, {2, 4})));
    EXPECT_TRUE(weakly_separated(KSet(4, {1, 2}), KSet(4, {2, 3})));
    EXPECT_TRUE(weakly_separated(KSet(9, {1, 2, 4, 9}), KSet(9, {1, 2, 6, 7})));
    EXPECT_THROW(weakly_separated(KSet(4, {1, 2}), KSet(5, {1, 2})), invalid_input);
}

TEST(WeakSeparation, ChordTestWitnessSearchAndOracleAgree)
{
    for (int n = 2; n <= 8; ++n)
        for (int k = 1; k <= std::min(4, n - 1); ++k) {
            auto all = all_ksubsets(n, k);
            for (Mask a : all)
                for (Mask b : all) {
                    KSet A(n, a), B(n, b);
                    bool want = oracle::weakly_separated(a, b, n);
                    ASSERT_EQ(weakly_separated(A, B), want) << compact(A) << " " << compact(B);
                    ASSERT_EQ(weakly_separated_by_witness(A, B), want) << compact(A) << " " << compact(B);
                }
        }
}

TEST(WeakSeparation, IsSymmetric)
{
    for (Mask a : all_ksubsets(7, 3))
        for (Mask b : all_ksubsets(7, 3))
            EXPECT_EQ(weakly_separated(KSet(7, a), KSet(7, b)), weakly_separated(KSet(7, b), KSet(7, a)));
}

TEST(GaleOrder, ShiftedComparison)
{
    EXPECT_TRUE(kset_leq(1, KSet(4, {1, 2}), KSet(4, {1, 3})));
    EXPECT_TRUE(kset_leq(2, KSet(4, {2, 3}), KSet(4, {1, 3})));
    EXPECT_FALSE(kset_leq(1, KSet(4, {1, 3}), KSet(4, {1, 2})));
}

TEST(GaleOrder, AgreesWithOracle)
{
    int n = 6;
    for (int i = 1; i <= n; ++i)
        for (Mask a : all_ksubsets(n, 3))
            for (Mask b : all_ksubsets(n, 3)) ASSERT_EQ(kset_leq(i, KSet(n, a), KSet(n, b)), oracle::gale_leq(i, a, b, n));
}

TEST(QuasiAdjacency, Examples)
{
    EXPECT_TRUE(quasi_adjacent(KSet(4, {1, 2}), KSet(4, {2, 3})));
    EXPECT_FALSE(quasi_adjacent(KSet(4, {1, 2}), KSet(4, {3, 4})));
    EXPECT_TRUE(quasi_adjacent(KSet(9, {1, 2, 3, 4}), KSet(9, {2, 3, 4, 5})));
}

TEST(Subsets, CountsAreBinomial)
{
    EXPECT_EQ(all_ksubsets(9, 4).size(), 126u);
    EXPECT_EQ(all_ksubsets(6, 0).size(), 1u);
    auto v = all_ksubsets(8, 3);
    EXPECT_TRUE(std::is_sorted(v.begin(), v.end()));
}
