#pragma once

// Permutations in one-line notation, standardization (pack), classical
// pattern containment, and the simple marked mesh pattern statistic.
//
// Positions and values are 1-based at the interface. Storage is a plain
// vector of values, so sigma.values()[i - 1] is sigma_i.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace meshpat {

struct invalid_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class Permutation {
public:
    using value_type = int;

    Permutation() = default;

    // Throws invalid_input unless `values` is a rearrangement of 1..n.
    explicit Permutation(std::vector<int> values) : values_(std::move(values)) { validate(); }
    Permutation(std::initializer_list<int> values) : Permutation(std::vector<int>(values)) {}

    static Permutation identity(std::size_t n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v), unchecked_tag{});
    }

    static Permutation decreasing(std::size_t n) {
        std::vector<int> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(n - i);
        return Permutation(std::move(v), unchecked_tag{});
    }

    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }

    // 1-based access: at(i) is sigma_i.
    int at(std::size_t i) const {
        if (i < 1 || i > values_.size()) throw std::out_of_range("position out of range");
        return values_[i - 1];
    }

    std::span<const int> values() const { return values_; }
    auto begin() const { return values_.begin(); }
    auto end() const { return values_.end(); }

    // Position (1-based) of the given value.
    std::size_t position_of(int value) const {
        auto it = std::find(values_.begin(), values_.end(), value);
        if (it == values_.end()) throw std::out_of_range("value not in permutation");
        return static_cast<std::size_t>(it - values_.begin()) + 1;
    }

    // Digits for n <= 9 ("768945213"), comma separated otherwise.
    std::string to_string() const {
        std::string out;
        bool compact = values_.size() <= 9;
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (!compact && i > 0) out += ',';
            out += std::to_string(values_[i]);
        }
        return out;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.values_ <=> b.values_; }
    friend std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_string(); }

private:
    struct unchecked_tag {};
    Permutation(std::vector<int> values, unchecked_tag) : values_(std::move(values)) {}
    friend Permutation pack(std::span<const int> w);

    void validate() const {
        std::vector<bool> seen(values_.size() + 1, false);
        for (int v : values_) {
            if (v < 1 || static_cast<std::size_t>(v) > values_.size() || seen[static_cast<std::size_t>(v)])
                throw invalid_input("not a permutation of 1..n");
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    std::vector<int> values_;
};

// Quadrant thresholds (I, II, III, IV) counted counter-clockwise from the
// upper-right quadrant.
struct MeshPattern {
    int a = 0;
    int b = 0;
    int c = 0;
    int d = 0;

    constexpr MeshPattern() = default;
    constexpr MeshPattern(int a_, int b_, int c_, int d_) : a(a_), b(b_), c(c_), d(d_) {
        if (a < 0 || b < 0 || c < 0 || d < 0) throw invalid_input("mesh pattern thresholds must be non-negative");
    }

    friend constexpr bool operator==(const MeshPattern&, const MeshPattern&) = default;
    friend std::ostream& operator<<(std::ostream& os, const MeshPattern& p) {
        return os << '(' << p.a << ',' << p.b << ',' << p.c << ',' << p.d << ')';
    }
};

struct QuadrantCounts {
    int q1 = 0;  // right and above
    int q2 = 0;  // left and above
    int q3 = 0;  // left and below
    int q4 = 0;  // right and below

    friend constexpr bool operator==(const QuadrantCounts&, const QuadrantCounts&) = default;
    friend std::ostream& operator<<(std::ostream& os, const QuadrantCounts& q) {
        return os << '(' << q.q1 << ',' << q.q2 << ',' << q.q3 << ',' << q.q4 << ')';
    }
};

// Composition of n: positive parts summing to n. Empty only for n = 0.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 1) throw invalid_input("composition parts must be positive");
    }
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    std::span<const int> parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }
    int total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition& a, const Composition& b) { return a.parts_ <=> b.parts_; }
    friend std::ostream& operator<<(std::ostream& os, const Composition& c) {
        os << '(';
        for (std::size_t i = 0; i < c.parts_.size(); ++i) os << (i ? "," : "") << c.parts_[i];
        return os << ')';
    }

private:
    std::vector<int> parts_;
};

// Standardization: the i-th smallest entry of w becomes i.
inline Permutation pack(std::span<const int> w) {
    std::vector<std::size_t> order(w.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return w[x] < w[y]; });
    std::vector<int> out(w.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
        if (r > 0 && w[order[r]] == w[order[r - 1]]) throw invalid_input("pack: entries must be distinct");
        out[order[r]] = static_cast<int>(r + 1);
    }
    return Permutation(std::move(out), Permutation::unchecked_tag{});
}

inline Permutation pack(std::initializer_list<int> w) { return pack(std::span<const int>(w.begin(), w.size())); }

namespace detail {

// Backtracking embedding of tau into sigma. `chosen` holds the sigma
// positions picked for tau_1..tau_depth; the next pick must keep the
// relative order against every earlier pick.
inline bool embed(std::span<const int> tau, std::span<const int> sigma, std::vector<std::size_t>& chosen,
                  std::size_t start) {
    std::size_t depth = chosen.size();
    if (depth == tau.size()) return true;
    // Not enough positions left.
    if (sigma.size() - start < tau.size() - depth) return false;
    for (std::size_t p = start; p + (tau.size() - depth) <= sigma.size(); ++p) {
        bool ok = true;
        for (std::size_t q = 0; q < depth && ok; ++q)
            ok = (tau[q] < tau[depth]) == (sigma[chosen[q]] < sigma[p]);
        if (!ok) continue;
        chosen.push_back(p);
        if (embed(tau, sigma, chosen, p + 1)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace detail

// True iff some subsequence of sigma is order-isomorphic to tau.
inline bool occurs(const Permutation& tau, const Permutation& sigma) {
    if (tau.size() > sigma.size()) return false;
    std::vector<std::size_t> chosen;
    chosen.reserve(tau.size());
    return detail::embed(tau.values(), sigma.values(), chosen, 0);
}

inline bool avoids(const Permutation& tau, const Permutation& sigma) { return !occurs(tau, sigma); }

// Specialized O(n^2) test for the pattern 132: some j has a smaller value to
// its left and a value to its right lying strictly between the two.
inline bool avoids_132(std::span<const int> sigma) {
    const std::size_t n = sigma.size();
    int prefix_min = n ? sigma[0] : 0;
    for (std::size_t j = 1; j < n; ++j) {
        if (prefix_min < sigma[j]) {
            for (std::size_t k = j + 1; k < n; ++k)
                if (prefix_min < sigma[k] && sigma[k] < sigma[j]) return false;
        }
        prefix_min = std::min(prefix_min, sigma[j]);
    }
    return true;
}

inline bool avoids_132(const Permutation& sigma) { return avoids_132(sigma.values()); }

inline void require_132_avoiding(const Permutation& sigma) {
    if (!avoids_132(sigma)) throw invalid_input("permutation " + sigma.to_string() + " contains the pattern 132");
}

inline QuadrantCounts quadrant_counts(const Permutation& sigma, std::size_t i) {
    if (i < 1 || i > sigma.size()) throw std::out_of_range("position out of range");
    auto v = sigma.values();
    const int pivot = v[i - 1];
    QuadrantCounts q;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (j + 1 == i) continue;
        bool right = j + 1 > i;
        bool above = v[j] > pivot;
        if (right && above) ++q.q1;
        else if (!right && above) ++q.q2;
        else if (!right) ++q.q3;
        else ++q.q4;
    }
    return q;
}

inline bool matches(const QuadrantCounts& q, const MeshPattern& p) {
    return q.q1 >= p.a && q.q2 >= p.b && q.q3 >= p.c && q.q4 >= p.d;
}

inline bool matches(const Permutation& sigma, std::size_t i, const MeshPattern& p) {
    return matches(quadrant_counts(sigma, i), p);
}

// Number of positions of sigma matching the marked mesh pattern. O(n^2).
inline int mmp(const MeshPattern& p, std::span<const int> sigma) {
    const std::size_t n = sigma.size();
    int count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        int above_left = 0, below_left = 0;
        for (std::size_t j = 0; j < i; ++j) (sigma[j] > sigma[i] ? above_left : below_left)++;
        // Values below sigma_i total sigma_i - 1.
        int below_right = sigma[i] - 1 - below_left;
        int above_right = static_cast<int>(n - 1 - i) - below_right;
        if (above_right >= p.a && above_left >= p.b && below_left >= p.c && below_right >= p.d) ++count;
    }
    return count;
}

inline int mmp(const MeshPattern& p, const Permutation& sigma) { return mmp(p, sigma.values()); }

// Lengths of the maximal increasing runs.
inline Composition descent_composition(const Permutation& sigma) {
    std::vector<int> parts;
    auto v = sigma.values();
    int run = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        ++run;
        if (i + 1 == v.size() || v[i] > v[i + 1]) {
            parts.push_back(run);
            run = 0;
        }
    }
    return Composition(std::move(parts));
}

// Remove the entry at a 1-based position and standardize the rest.
inline Permutation remove_and_pack(const Permutation& sigma, std::size_t position) {
    if (position < 1 || position > sigma.size()) throw std::out_of_range("position out of range");
    std::vector<int> rest;
    rest.reserve(sigma.size() - 1);
    for (std::size_t i = 1; i <= sigma.size(); ++i)
        if (i != position) rest.push_back(sigma.at(i));
    return pack(rest);
}

}  // namespace meshpat

template <>
struct std::hash<meshpat::Permutation> {
    std::size_t operator()(const meshpat::Permutation& p) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int v : p) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
        return h;
    }
};
