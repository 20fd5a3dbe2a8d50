#pragma once

// Closed forms and recurrences for the number triangles that refine the
// Catalan numbers, plus exact expansion of rational generating functions.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "integer.hpp"
#include "permutation.hpp"

namespace meshpat {

inline Integer catalan_number(std::size_t n) {
    return binomial(static_cast<std::int64_t>(2 * n), static_cast<std::int64_t>(n)) / Integer(n + 1);
}

// Ballot numbers laid out with C(n, 1) = 1 and C(n, n) = C_n:
//   C(n, k) = (n+k-2)! (n-k+1) / ((k-1)! n!) = binom(n+k-2, k-1) (n-k+1) / n
inline Integer catalan_triangle(std::size_t n, std::size_t k) {
    if (n < 1 || k < 1 || k > n) throw std::out_of_range("catalan_triangle: need 1 <= k <= n");
    const auto nn = static_cast<std::int64_t>(n);
    const auto kk = static_cast<std::int64_t>(k);
    return binomial(nn + kk - 2, kk - 1) * Integer(nn - kk + 1) / Integer(nn);
}

// N(n, k) = binom(n, k-1) binom(n, k) / n.
inline Integer narayana(std::size_t n, std::size_t k) {
    if (n < 1 || k < 1 || k > n) throw std::out_of_range("narayana: need 1 <= k <= n");
    const auto nn = static_cast<std::int64_t>(n);
    const auto kk = static_cast<std::int64_t>(k);
    return binomial(nn, kk - 1) * binomial(nn, kk) / Integer(nn);
}

enum class TriangleKind { catalan, narayana, q_zero };

// Entries keyed by (n, k), both 1-based.
struct TriangleTable {
    TriangleKind kind = TriangleKind::catalan;
    std::map<std::pair<std::size_t, std::size_t>, Integer> entries;

    Integer at(std::size_t n, std::size_t k) const { return entries.at({n, k}); }
};

// ---------------------------------------------------------------------------
// Number of sigma in S_n(132) with no position having k larger entries to
// its left, i.e. Q_n^{(0,k,0,0)}(0). Three independent routes.
// ---------------------------------------------------------------------------

// Bottom-up table of the three-case recurrence
//   R(n, k) = 1                          if n = 1 or k = 1
//           = R(n-1, k) + R(n, k-1)      if n >= k
//           = R(n, k-1)                  if n < k
class QZeroRecurrence {
public:
    QZeroRecurrence(std::size_t max_n, std::size_t max_k)
        : max_k_(max_k), table_((max_n + 1) * (max_k + 1), Integer(0)) {
        for (std::size_t n = 1; n <= max_n; ++n) {
            for (std::size_t k = 1; k <= max_k; ++k) {
                Integer v;
                if (n == 1 || k == 1) v = 1;
                else if (n >= k) v = get(n - 1, k) + get(n, k - 1);
                else v = get(n, k - 1);
                table_[index(n, k)] = v;
            }
        }
    }

    Integer operator()(std::size_t n, std::size_t k) const { return get(n, k); }

private:
    std::size_t index(std::size_t n, std::size_t k) const { return n * (max_k_ + 1) + k; }
    Integer get(std::size_t n, std::size_t k) const { return table_.at(index(n, k)); }

    std::size_t max_k_;
    std::vector<Integer> table_;
};

inline Integer q_zero_recurrence(std::size_t n, std::size_t k) {
    if (n < 1 || k < 1) throw std::out_of_range("q_zero_recurrence: need n, k >= 1");
    return QZeroRecurrence(n, k)(n, k);
}

// Sum of the first min(k, n) entries of row n of the Catalan triangle.
inline Integer q_zero_partial_sum(std::size_t n, std::size_t k) {
    if (n < 1 || k < 1) throw std::out_of_range("q_zero_partial_sum: need n, k >= 1");
    Integer s = 0;
    for (std::size_t j = 1; j <= std::min(k, n); ++j) s += catalan_triangle(n, j);
    return s;
}

// Catalan convolution over the first breakpoint of a parking function:
//   R(n, k) = R(n-1, k) + sum_{i=1}^{k-1} C_{i-1} R(n-i, k-i)
// The leading term uses R(0, k) = 1 (dropping the first letter of a prime
// parking function of length 1 leaves the empty one); a breakpoint term
// needs a nonempty tail, so it vanishes when n - i < 1.
class QZeroConvolution {
public:
    QZeroConvolution(std::size_t max_n, std::size_t max_k)
        : max_k_(max_k), table_((max_n + 1) * (max_k + 1), Integer(0)) {
        std::vector<Integer> catalan(max_k + 1);
        for (std::size_t i = 0; i <= max_k; ++i) catalan[i] = catalan_number(i);
        for (std::size_t k = 1; k <= max_k; ++k) table_[index(0, k)] = 1;
        for (std::size_t n = 1; n <= max_n; ++n) {
            for (std::size_t k = 1; k <= max_k; ++k) {
                Integer v = table_[index(n - 1, k)];
                for (std::size_t i = 1; i + 1 <= k && i < n; ++i) v += catalan[i - 1] * table_[index(n - i, k - i)];
                table_[index(n, k)] = v;
            }
        }
    }

    Integer operator()(std::size_t n, std::size_t k) const { return table_.at(index(n, k)); }

private:
    std::size_t index(std::size_t n, std::size_t k) const { return n * (max_k_ + 1) + k; }

    std::size_t max_k_;
    std::vector<Integer> table_;
};

inline Integer q_zero_convolution(std::size_t n, std::size_t k) {
    if (n < 1 || k < 1) throw std::out_of_range("q_zero_convolution: need n, k >= 1");
    return QZeroConvolution(n, k)(n, k);
}

inline TriangleTable catalan_triangle_table(std::size_t rows) {
    TriangleTable t{TriangleKind::catalan, {}};
    for (std::size_t n = 1; n <= rows; ++n)
        for (std::size_t k = 1; k <= n; ++k) t.entries[{n, k}] = catalan_triangle(n, k);
    return t;
}

inline TriangleTable narayana_table(std::size_t rows) {
    TriangleTable t{TriangleKind::narayana, {}};
    for (std::size_t n = 1; n <= rows; ++n)
        for (std::size_t k = 1; k <= n; ++k) t.entries[{n, k}] = narayana(n, k);
    return t;
}

// Square table, columns k = 1..cols (defaults to rows).
inline TriangleTable q_zero_table(std::size_t rows, std::size_t cols = 0) {
    if (cols == 0) cols = rows;
    QZeroRecurrence r(rows, cols);
    TriangleTable t{TriangleKind::q_zero, {}};
    for (std::size_t n = 1; n <= rows; ++n)
        for (std::size_t k = 1; k <= cols; ++k) t.entries[{n, k}] = r(n, k);
    return t;
}

// ---------------------------------------------------------------------------
// Rational series
// ---------------------------------------------------------------------------

using IntPolynomial = std::vector<Integer>;

inline IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.empty() || b.empty()) return {};
    IntPolynomial out(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

inline IntPolynomial poly_pow(const IntPolynomial& a, unsigned e) {
    IntPolynomial out{1};
    for (unsigned i = 0; i < e; ++i) out = poly_mul(out, a);
    return out;
}

struct RationalSeries {
    IntPolynomial numerator;
    IntPolynomial denominator;

    RationalSeries(IntPolynomial num, IntPolynomial den) : numerator(std::move(num)), denominator(std::move(den)) {
        if (denominator.empty() || denominator[0].is_zero())
            throw invalid_input("rational series: denominator needs a nonzero constant term");
    }
};

// Coefficients of t^0..t^order of numerator/denominator. Throws invalid_input
// if a coefficient is not an integer.
inline IntPolynomial expand_series(const RationalSeries& rs, std::size_t order) {
    const auto& num = rs.numerator;
    const auto& den = rs.denominator;
    IntPolynomial out(order + 1, Integer(0));
    for (std::size_t m = 0; m <= order; ++m) {
        Integer acc = m < num.size() ? num[m] : Integer(0);
        for (std::size_t j = 1; j <= m && j < den.size(); ++j) acc -= den[j] * out[m - j];
        if (!(acc % den[0]).is_zero()) throw invalid_input("rational series has non-integer coefficients");
        out[m] = acc / den[0];
    }
    return out;
}

// Closed forms of sum_n Q_n^{(0,k,0,0)}(0) t^n (with constant term 1) for
// k = 1..4.
inline RationalSeries q_zero_rational_form(int k) {
    const IntPolynomial one_minus_t{1, -1};
    switch (k) {
        case 1: return {{1}, one_minus_t};
        case 2: return {{1, -1, 1}, poly_pow(one_minus_t, 2)};
        case 3: return {{1, -2, 2, 1, -1}, poly_pow(one_minus_t, 3)};
        case 4: return {{1, -3, 4, -1, 3, -5, 2}, poly_pow(one_minus_t, 4)};
        default: throw invalid_input("closed forms are tabulated for k = 1..4 only");
    }
}

}  // namespace meshpat
