#include <gtest/gtest.h>

#include <random>
#include <set>

#include "meshpat/distribution.hpp"
#include "meshpat/permutation.hpp"
#include "oracles.hpp"

using namespace meshpat;

namespace {

const Permutation kSigma{7, 6, 8, 9, 4, 5, 2, 1, 3};

}  // namespace

TEST(Permutation, RejectsNonPermutations) {
    EXPECT_THROW(Permutation({1, 1}), invalid_input);
    EXPECT_THROW(Permutation({0, 1}), invalid_input);
    EXPECT_THROW(Permutation({1, 3}), invalid_input);
    EXPECT_NO_THROW(Permutation(std::vector<int>{}));
    EXPECT_EQ(Permutation{}.size(), 0u);
}

TEST(Permutation, OneBasedAccess) {
    EXPECT_EQ(kSigma.at(1), 7);
    EXPECT_EQ(kSigma.at(9), 3);
    EXPECT_THROW(kSigma.at(0), std::out_of_range);
    EXPECT_THROW(kSigma.at(10), std::out_of_range);
    EXPECT_EQ(kSigma.position_of(1), 8u);
    EXPECT_EQ(kSigma.to_string(), "768945213");
}

TEST(Pack, ExamplesAndErrors) {
    EXPECT_EQ(pack({2, 7, 5, 4}), (Permutation{1, 4, 3, 2}));
    EXPECT_EQ(pack({1, 2, 3}), (Permutation{1, 2, 3}));
    EXPECT_EQ(pack({4, 1, 2}), (Permutation{3, 1, 2}));
    EXPECT_EQ(pack(std::vector<int>{}), Permutation{});
    EXPECT_THROW(pack({3, 5, 3}), invalid_input);
}

TEST(Pack, IdempotentAndMatchesRankOracle) {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> dist(-1000, 1000);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> w;
        while (w.size() < static_cast<std::size_t>(trial % 12)) {
            int x = dist(rng);
            if (std::find(w.begin(), w.end(), x) == w.end()) w.push_back(x);
        }
        Permutation p = pack(w);
        EXPECT_EQ(std::vector<int>(p.begin(), p.end()), oracle::pack(w));
        EXPECT_EQ(pack(p.values()), p);
    }
}

TEST(Occurs, Examples) {
    EXPECT_FALSE(occurs(Permutation{1, 3, 2}, kSigma));
    EXPECT_TRUE(occurs(Permutation{1}, kSigma));
    EXPECT_FALSE(occurs(Permutation{2, 1}, Permutation{1, 2, 3}));
    EXPECT_TRUE(avoids(Permutation{1, 3, 2}, kSigma));
    EXPECT_FALSE(avoids(Permutation{1, 3, 2}, Permutation{1, 3, 2}));
    EXPECT_TRUE(avoids(Permutation{1, 3, 2}, Permutation{}));
    EXPECT_TRUE(occurs(Permutation{}, Permutation{}));
}

TEST(Occurs, GenericAgreesWithTripleLoopUpTo7) {
    const Permutation p132{1, 3, 2};
    for (std::size_t n = 0; n <= 7; ++n) {
        for (const auto& w : oracle::all_permutations(n)) {
            Permutation sigma(w);
            bool expected = !oracle::contains_132(w);
            ASSERT_EQ(avoids(p132, sigma), expected) << sigma;
            ASSERT_EQ(avoids_132(sigma), expected) << sigma;
        }
    }
}

TEST(Occurs, GenericPatternAgainstSubsetEnumeration) {
    // Every length-3 subsequence of every sigma in S_5, packed, is an
    // occurring pattern; nothing else of length 3 occurs.
    for (const auto& w : oracle::all_permutations(5)) {
        Permutation sigma(w);
        std::set<std::vector<int>> seen;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
                for (int k = j + 1; k < 5; ++k) seen.insert(oracle::pack({w[i], w[j], w[k]}));
        for (const auto& tau : oracle::all_permutations(3))
            ASSERT_EQ(occurs(Permutation(tau), sigma), seen.count(tau) == 1);
    }
}

TEST(QuadrantCounts, Examples) {
    EXPECT_EQ(quadrant_counts(kSigma, 6), (QuadrantCounts{0, 4, 1, 3}));
    EXPECT_EQ(quadrant_counts(Permutation{1}, 1), (QuadrantCounts{0, 0, 0, 0}));
    EXPECT_EQ(quadrant_counts(kSigma, 1), (QuadrantCounts{2, 0, 0, 6}));
    EXPECT_THROW(quadrant_counts(kSigma, 0), std::out_of_range);
    EXPECT_THROW(quadrant_counts(kSigma, 10), std::out_of_range);
}

TEST(QuadrantCounts, SumToNMinusOneAndMatchOracle) {
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const auto& w : oracle::all_permutations(n)) {
            Permutation sigma(w);
            for (std::size_t i = 1; i <= n; ++i) {
                auto q = quadrant_counts(sigma, i);
                auto o = oracle::quadrants(w, i);
                ASSERT_EQ(q.q1 + q.q2 + q.q3 + q.q4, static_cast<int>(n) - 1);
                ASSERT_EQ(q, (QuadrantCounts{o.q1, o.q2, o.q3, o.q4}));
            }
        }
    }
}

TEST(Matches, Examples) {
    EXPECT_TRUE(matches(kSigma, 6, MeshPattern{0, 3, 1, 1}));
    EXPECT_TRUE(matches(kSigma, 4, MeshPattern{}));
    EXPECT_FALSE(matches(kSigma, 4, MeshPattern{1, 0, 0, 0}));
    EXPECT_THROW(matches(kSigma, 0, MeshPattern{}), std::out_of_range);
    EXPECT_THROW(MeshPattern(0, -1, 0, 0), invalid_input);
}

TEST(Mmp, Examples) {
    EXPECT_EQ(mmp({0, 1, 0, 0}, kSigma), 6);
    EXPECT_EQ(mmp({0, 0, 0, 0}, kSigma), 9);
    EXPECT_EQ(mmp({0, 0, 1, 0}, kSigma), 4);
    EXPECT_EQ(mmp({3, 3, 3, 3}, Permutation{}), 0);
}

TEST(Mmp, AgreesWithQuadrantOracleOnAllPatterns) {
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& w : oracle::all_permutations(n))
            for (int a = 0; a <= 2; ++a)
                for (int b = 0; b <= 2; ++b)
                    for (int c = 0; c <= 2; ++c)
                        for (int d = 0; d <= 2; ++d)
                            ASSERT_EQ(mmp({a, b, c, d}, Permutation(w)), oracle::mmp(a, b, c, d, w));
}

TEST(Mmp, QuadrantTwoCountsFirstValueOn132Avoiders) {
    for (std::size_t n = 1; n <= 9; ++n)
        for (const auto& sigma : avoiders_132(n)) ASSERT_EQ(mmp({0, 1, 0, 0}, sigma), sigma.at(1) - 1) << sigma;
}

TEST(DescentComposition, Examples) {
    EXPECT_EQ(descent_composition(Permutation{7, 1, 2, 3, 4, 5, 6}), (Composition{1, 6}));
    EXPECT_EQ(descent_composition(Permutation::identity(6)), (Composition{6}));
    EXPECT_EQ(descent_composition(Permutation{6, 5, 4, 1, 2, 3}), (Composition{1, 1, 1, 3}));
    EXPECT_EQ(descent_composition(Permutation{}), Composition{});
    EXPECT_THROW(Composition({2, 0}), invalid_input);
}

TEST(DescentComposition, PartsSumToN) {
    for (const auto& w : oracle::all_permutations(6)) EXPECT_EQ(descent_composition(Permutation(w)).total(), 6);
}
