#pragma once

// Brute-force reference implementations used only by the tests. Nothing here
// calls into the library's algorithms beyond the Permutation value type.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "meshpat/permutation.hpp"

namespace oracle {

using Word = std::vector<int>;

inline std::vector<Word> all_permutations(std::size_t n) {
    Word w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Word> out;
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

inline bool contains_132(const Word& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            for (std::size_t k = j + 1; k < s.size(); ++k)
                if (s[i] < s[k] && s[k] < s[j]) return true;
    return false;
}

inline std::vector<Word> avoiders_132(std::size_t n) {
    std::vector<Word> out;
    for (auto& w : all_permutations(n))
        if (!contains_132(w)) out.push_back(w);
    return out;
}

// pack by rank counting.
inline Word pack(const Word& w) {
    Word out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        out[i] = 1 + static_cast<int>(std::count_if(w.begin(), w.end(), [&](int x) { return x < w[i]; }));
    return out;
}

// Points of the graph {(i, sigma_i)} strictly inside each open quadrant
// centred at (i0, sigma_i0).
struct Quadrants {
    int q1, q2, q3, q4;
};

inline Quadrants quadrants(const Word& s, std::size_t i0) {
    Quadrants q{0, 0, 0, 0};
    const int x0 = static_cast<int>(i0), y0 = s[i0 - 1];
    for (std::size_t j = 1; j <= s.size(); ++j) {
        int x = static_cast<int>(j), y = s[j - 1];
        if (x > x0 && y > y0) ++q.q1;
        if (x < x0 && y > y0) ++q.q2;
        if (x < x0 && y < y0) ++q.q3;
        if (x > x0 && y < y0) ++q.q4;
    }
    return q;
}

inline int mmp(int a, int b, int c, int d, const Word& s) {
    int count = 0;
    for (std::size_t i = 1; i <= s.size(); ++i) {
        auto q = quadrants(s, i);
        count += q.q1 >= a && q.q2 >= b && q.q3 >= c && q.q4 >= d;
    }
    return count;
}

// Distribution of a statistic over S_n(132), by filtering S_n.
inline std::vector<std::int64_t> distribution(std::size_t n, int a, int b, int c, int d) {
    std::vector<std::int64_t> coeffs(n + 1, 0);
    for (const auto& w : avoiders_132(n)) ++coeffs[static_cast<std::size_t>(mmp(a, b, c, d, w))];
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    return coeffs;
}

// All Dyck words of semilength n over {U, D}, by filtering all 2^(2n) words.
inline std::vector<std::string> dyck_words(std::size_t n) {
    std::vector<std::string> out;
    const std::size_t len = 2 * n;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
        std::string w;
        int h = 0;
        bool ok = true;
        for (std::size_t i = 0; i < len && ok; ++i) {
            bool up = (mask >> (len - 1 - i)) & 1;
            w += up ? 'U' : 'D';
            h += up ? 1 : -1;
            ok = h >= 0;
        }
        if (ok && h == 0) out.push_back(w);
    }
    return out;
}

inline int down_steps_at_or_above(const std::string& w, int ell) {
    int h = 0, count = 0;
    for (char ch : w) {
        h += ch == 'U' ? 1 : -1;
        if (ch == 'D' && h >= ell) ++count;
    }
    return count;
}

// Ballot numbers through the Pascal-like recurrence with C(n,1) = 1,
// C(n,k) = C(n,k-1) + C(n-1,k) for k < n and C(n,n) = C(n,n-1).
inline std::map<std::pair<int, int>, std::int64_t> ballot_table(int rows) {
    std::map<std::pair<int, int>, std::int64_t> t;
    for (int n = 1; n <= rows; ++n) {
        t[{n, 1}] = 1;
        for (int k = 2; k <= n; ++k) t[{n, k}] = k < n ? t[{n, k - 1}] + t[{n - 1, k}] : t[{n, k - 1}];
    }
    return t;
}

// Binary tree shapes as nested strings "(L)R"; counts left branches.
inline std::vector<std::string> shapes(std::size_t n) {
    std::vector<std::vector<std::string>> s(n + 1);
    s[0] = {""};
    for (std::size_t m = 1; m <= n; ++m)
        for (std::size_t l = 0; l < m; ++l)
            for (const auto& a : s[l])
                for (const auto& b : s[m - 1 - l]) s[m].push_back("(" + a + ")" + b);
    return s[n];
}

// Number of nodes whose left subtree has >= ell nodes, read off the
// parenthesis word: a node's left subtree is the text inside its '(' ... ')'.
inline int left_subtrees_at_least(const std::string& w, std::size_t ell) {
    int count = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != '(') continue;
        int depth = 0;
        std::size_t j = i;
        for (; j < w.size(); ++j) {
            depth += w[j] == '(' ? 1 : -1;
            if (depth == 0) break;
        }
        std::size_t inner_nodes = static_cast<std::size_t>(std::count(w.begin() + static_cast<long>(i) + 1,
                                                                       w.begin() + static_cast<long>(j), '('));
        count += inner_nodes >= ell;
    }
    return count;
}

inline std::int64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline std::int64_t catalan(int n) { return binom(2 * n, n) / (n + 1); }

inline meshpat::Permutation perm(const Word& w) { return meshpat::Permutation(w); }

}  // namespace oracle
