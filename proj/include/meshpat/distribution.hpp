#pragma once

// Enumeration of 132-avoiding permutations and the distribution polynomials
//
//   Q_n(x) = sum over sigma in S_n(132) of x^{mmp(pattern)(sigma)}
//
// together with the coefficient tables that refine the Catalan numbers by
// the statistic.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "integer.hpp"
#include "permutation.hpp"

namespace meshpat {

// Dense coefficient vector, coeffs[k] = #{sigma : statistic = k}, trailing
// zeros trimmed. The zero polynomial has no coefficients.
struct StatPolynomial {
    std::size_t n = 0;
    MeshPattern pattern;
    std::vector<Integer> coeffs;

    Integer total() const {
        Integer s = 0;
        for (const auto& c : coeffs) s += c;
        return s;
    }

    Integer coefficient(std::size_t k) const { return k < coeffs.size() ? coeffs[k] : Integer(0); }

    // "8 + 4x + 2x^2"; "0" for the zero polynomial.
    std::string to_string() const {
        std::string out;
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (coeffs[k].is_zero()) continue;
            if (!out.empty()) out += " + ";
            bool unit = coeffs[k] == Integer(1);
            if (k == 0 || !unit) out += coeffs[k].to_string();
            if (k >= 1) out += 'x';
            if (k >= 2) out += '^' + std::to_string(k);
        }
        return out.empty() ? "0" : out;
    }

    friend bool operator==(const StatPolynomial&, const StatPolynomial&) = default;
    friend std::ostream& operator<<(std::ostream& os, const StatPolynomial& p) { return os << p.to_string(); }
};

inline void trim(std::vector<Integer>& coeffs) {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

namespace detail {

// Words of S_m(132) for m = 0..n via the decreasing-tree decomposition:
// sigma = A n B where the left subtree A carries the |A| largest values
// below n and B the smallest.
inline std::vector<std::vector<std::vector<int>>> avoider_words_by_size(std::size_t n) {
    std::vector<std::vector<std::vector<int>>> words(n + 1);
    words[0] = {{}};
    for (std::size_t m = 1; m <= n; ++m) {
        auto& out = words[m];
        for (std::size_t left = 0; left < m; ++left) {
            const std::size_t right = m - 1 - left;
            const int shift = static_cast<int>(right);
            for (const auto& a : words[left]) {
                for (const auto& b : words[right]) {
                    std::vector<int> w;
                    w.reserve(m);
                    for (int x : a) w.push_back(x + shift);
                    w.push_back(static_cast<int>(m));
                    w.insert(w.end(), b.begin(), b.end());
                    out.push_back(std::move(w));
                }
            }
        }
        std::sort(out.begin(), out.end());
    }
    return words;
}

}  // namespace detail

// All of S_n(132) in lexicographic order.
inline std::vector<Permutation> avoiders_132(std::size_t n) {
    auto words = detail::avoider_words_by_size(n);
    std::vector<Permutation> out;
    out.reserve(words[n].size());
    for (auto& w : words[n]) out.emplace_back(std::move(w));
    return out;
}

// Visits S_n(132) in lexicographic order without materializing Permutation
// objects.
template <typename F>
void for_each_avoider_132(std::size_t n, F&& visit) {
    auto words = detail::avoider_words_by_size(n);
    for (const auto& w : words[n]) visit(std::span<const int>(w));
}

// Generic filter of S_n; exponential, for cross-checking only.
inline std::vector<Permutation> enumerate_avoiders(std::size_t n, const Permutation& tau) {
    std::vector<int> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<int>(i + 1);
    std::vector<Permutation> out;
    do {
        Permutation sigma(w);
        if (avoids(tau, sigma)) out.push_back(std::move(sigma));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

inline StatPolynomial q_polynomial(std::size_t n, const MeshPattern& p) {
    StatPolynomial out{n, p, std::vector<Integer>(n + 1, Integer(0))};
    for_each_avoider_132(n, [&](std::span<const int> w) { ++out.coeffs[static_cast<std::size_t>(mmp(p, w))]; });
    trim(out.coeffs);
    return out;
}

enum class Quadrant { I = 1, II = 2, III = 3, IV = 4 };

inline MeshPattern single_quadrant_pattern(Quadrant q, int ell) {
    switch (q) {
        case Quadrant::I: return {ell, 0, 0, 0};
        case Quadrant::II: return {0, ell, 0, 0};
        case Quadrant::III: return {0, 0, ell, 0};
        case Quadrant::IV: return {0, 0, 0, ell};
    }
    throw invalid_input("unknown quadrant");
}

// Rows n = 1..max_n of the coefficient array; the n = 0 constant term 1 of
// the generating function is implicit.
struct DistributionTable {
    Quadrant quadrant = Quadrant::I;
    int ell = 1;
    std::map<std::size_t, std::vector<Integer>> rows;

    MeshPattern pattern() const { return single_quadrant_pattern(quadrant, ell); }
};

inline DistributionTable distribution_table(Quadrant q, int ell, std::size_t max_n) {
    if (ell < 1) throw invalid_input("ell must be positive");
    if (max_n < 1) throw invalid_input("max_n must be positive");
    DistributionTable t{q, ell, {}};
    for (std::size_t n = 1; n <= max_n; ++n) t.rows[n] = q_polynomial(n, t.pattern()).coeffs;
    return t;
}

}  // namespace meshpat
