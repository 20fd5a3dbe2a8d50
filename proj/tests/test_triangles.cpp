#include <gtest/gtest.h>

#include "meshpat/distribution.hpp"
#include "meshpat/triangles.hpp"
#include "oracles.hpp"

using namespace meshpat;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

// Q_n^{(0,k,0,0)}(0) by direct enumeration.
Integer q_zero_brute(std::size_t n, int k) {
    Integer count = 0;
    for (const auto& w : oracle::avoiders_132(n)) count += oracle::mmp(0, k, 0, 0, w) == 0;
    return count;
}

}  // namespace

TEST(CatalanNumber, Values) {
    EXPECT_EQ(catalan_number(0), Integer(1));
    EXPECT_EQ(catalan_number(4), Integer(14));
    EXPECT_EQ(catalan_number(8), Integer(1430));
    EXPECT_EQ(catalan_number(12), Integer(208012));
}

TEST(CatalanTriangle, MatchesBallotRecurrence) {
    auto ballot = oracle::ballot_table(16);
    for (std::size_t n = 1; n <= 16; ++n)
        for (std::size_t k = 1; k <= n; ++k)
            ASSERT_EQ(catalan_triangle(n, k), Integer(ballot[{static_cast<int>(n), static_cast<int>(k)}]));
}

TEST(CatalanTriangle, EdgesAndErrors) {
    for (std::size_t n = 1; n <= 12; ++n) {
        EXPECT_EQ(catalan_triangle(n, 1), Integer(1));
        EXPECT_EQ(catalan_triangle(n, n), catalan_number(n - 1));
        if (n > 1) {
            EXPECT_EQ(catalan_triangle(n, n - 1), catalan_number(n - 1));
        }
        Integer row = 0;
        for (std::size_t k = 1; k <= n; ++k) row += catalan_triangle(n, k);
        EXPECT_EQ(row, catalan_number(n));
    }
    EXPECT_THROW(catalan_triangle(0, 0), std::out_of_range);
    EXPECT_THROW(catalan_triangle(3, 4), std::out_of_range);
    EXPECT_THROW(catalan_triangle(3, 0), std::out_of_range);
}

TEST(Narayana, ValuesSymmetryAndRowSums) {
    EXPECT_EQ(narayana(8, 4), Integer(490));
    EXPECT_EQ(narayana(7, 4), Integer(175));
    EXPECT_EQ(narayana(1, 1), Integer(1));
    for (std::size_t n = 1; n <= 12; ++n) {
        Integer row = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            EXPECT_EQ(narayana(n, k), narayana(n, n + 1 - k));
            row += narayana(n, k);
        }
        EXPECT_EQ(row, catalan_number(n));
    }
    EXPECT_THROW(narayana(4, 5), std::out_of_range);
}

TEST(QZero, PublishedValues) {
    EXPECT_EQ(q_zero_recurrence(8, 3), Integer(35));
    EXPECT_EQ(q_zero_recurrence(3, 7), Integer(5));
    EXPECT_EQ(q_zero_recurrence(5, 4), Integer(28));
    EXPECT_EQ(q_zero_recurrence(5, 2), Integer(5));
    for (std::size_t n = 1; n <= 10; ++n) EXPECT_EQ(q_zero_recurrence(n, n), catalan_number(n));
    EXPECT_THROW(q_zero_recurrence(0, 1), std::out_of_range);
    EXPECT_THROW(q_zero_partial_sum(1, 0), std::out_of_range);
    EXPECT_THROW(q_zero_convolution(0, 0), std::out_of_range);
}

TEST(QZero, ThreeRoutesAgree) {
    QZeroRecurrence rec(12, 12);
    QZeroConvolution conv(12, 12);
    for (std::size_t n = 1; n <= 12; ++n)
        for (std::size_t k = 1; k <= 12; ++k) {
            ASSERT_EQ(rec(n, k), q_zero_partial_sum(n, k)) << n << "," << k;
            ASSERT_EQ(rec(n, k), conv(n, k)) << n << "," << k;
        }
}

TEST(QZero, MatchesEnumerationUpTo8) {
    auto table = q_zero_table(8);
    for (std::size_t n = 1; n <= 8; ++n)
        for (std::size_t k = 1; k <= 8; ++k)
            ASSERT_EQ(table.at(n, k), q_zero_brute(n, static_cast<int>(k))) << n << "," << k;
}

TEST(QZero, IsConstantTermOfQPolynomial) {
    for (std::size_t n = 1; n <= 8; ++n)
        for (int k = 1; k <= 8; ++k)
            ASSERT_EQ(q_polynomial(n, {0, k, 0, 0}).coefficient(0), q_zero_recurrence(n, static_cast<std::size_t>(k)));
}

TEST(ExpandSeries, Examples) {
    // 1/(1-t)^2 = sum (m+1) t^m; times (1-t+t^2) shifts to 1,1,2,3,...
    EXPECT_EQ(expand_series({ints({1, -1, 1}), ints({1, -2, 1})}, 8), ints({1, 1, 2, 3, 4, 5, 6, 7, 8}));
    EXPECT_EQ(expand_series({ints({1}), ints({1, -1, -1})}, 7), ints({1, 1, 2, 3, 5, 8, 13, 21}));
    EXPECT_EQ(expand_series({IntPolynomial{}, ints({1, -1})}, 3), ints({0, 0, 0, 0}));
    EXPECT_THROW(RationalSeries(ints({1}), ints({0, 1})), invalid_input);
    EXPECT_THROW(expand_series({ints({1}), ints({2})}, 2), invalid_input);
}

TEST(ExpandSeries, ClosedFormsGiveQZeroColumns) {
    for (int k = 1; k <= 4; ++k) {
        auto series = expand_series(q_zero_rational_form(k), 12);
        EXPECT_EQ(series[0], Integer(1));
        for (std::size_t n = 1; n <= 12; ++n)
            EXPECT_EQ(series[n], q_zero_recurrence(n, static_cast<std::size_t>(k))) << "k=" << k << " n=" << n;
    }
    EXPECT_THROW(q_zero_rational_form(0), invalid_input);
    EXPECT_THROW(q_zero_rational_form(5), invalid_input);
}

TEST(PolyArithmetic, MulAndPow) {
    EXPECT_EQ(poly_mul(ints({1, 1}), ints({1, -1})), ints({1, 0, -1}));
    EXPECT_EQ(poly_pow(ints({1, -1}), 3), ints({1, -3, 3, -1}));
    EXPECT_EQ(poly_pow(ints({1, -1}), 0), ints({1}));
    EXPECT_TRUE(poly_mul({}, ints({1})).empty());
}

TEST(TriangleTables, Layout) {
    auto c = catalan_triangle_table(8);
    EXPECT_EQ(c.entries.size(), 36u);
    EXPECT_EQ(c.at(8, 8), Integer(429));
    auto q = q_zero_table(8);
    EXPECT_EQ(q.entries.size(), 64u);
    EXPECT_EQ(q.at(8, 8), Integer(1430));
    EXPECT_EQ(narayana_table(4).at(4, 2), Integer(6));
    EXPECT_EQ(q_zero_table(3, 5).entries.size(), 15u);
}
