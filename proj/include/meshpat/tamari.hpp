#pragma once

// Tamari order on 132-avoiding permutations, realized through single
// rotations of the associated decreasing binary trees, and the order
// structure of the sets
//
//   S(n, k) = { sigma in S_n(132) : no position has k larger entries on its left }.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <iterator>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "bijections.hpp"
#include "distribution.hpp"
#include "permutation.hpp"

namespace meshpat {

struct not_found : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Which single rotation moves up in the order. A right rotation lifts a left
// child above its parent.
enum class RotationOrientation { right_rotation_up, left_rotation_up };

// Orientation under which S(6, 4) is the interval [123456, 654123]; checked
// against both candidates by select_orientation() in the test suite.
inline constexpr RotationOrientation tamari_orientation = RotationOrientation::right_rotation_up;

// Rotation at node x (prefix index). Returns nullopt when the needed child is
// missing. The result is an unlabeled shape.
inline std::optional<BinaryTree> rotate(const BinaryTree& tree, int x, RotationOrientation dir) {
    using Node = BinaryTree::Node;
    const Node& pivot = tree.node(x);
    const bool right_rot = dir == RotationOrientation::right_rotation_up;
    if ((right_rot ? pivot.left : pivot.right) == BinaryTree::none) return std::nullopt;

    std::vector<Node> out;
    out.reserve(tree.size());
    auto push = [&out] {
        out.emplace_back();
        return static_cast<int>(out.size() - 1);
    };
    std::function<int(int)> emit = [&](int i) -> int {
        if (i == BinaryTree::none) return BinaryTree::none;
        const Node& nd = tree.node(i);
        if (i != x) {
            int self = push();
            int l = emit(nd.left);
            int r = emit(nd.right);
            out[static_cast<std::size_t>(self)].left = l;
            out[static_cast<std::size_t>(self)].right = r;
            return self;
        }
        if (right_rot) {
            // x(y(A, B), C) -> y(A, x(B, C))
            const Node& y = tree.node(nd.left);
            int ny = push();
            int a = emit(y.left);
            int nx = push();
            int b = emit(y.right);
            int c = emit(nd.right);
            out[static_cast<std::size_t>(ny)].left = a;
            out[static_cast<std::size_t>(ny)].right = nx;
            out[static_cast<std::size_t>(nx)].left = b;
            out[static_cast<std::size_t>(nx)].right = c;
            return ny;
        }
        // x(A, y(B, C)) -> y(x(A, B), C)
        const Node& y = tree.node(nd.right);
        int ny = push();
        int nx = push();
        int a = emit(nd.left);
        int b = emit(y.left);
        int c = emit(y.right);
        out[static_cast<std::size_t>(nx)].left = a;
        out[static_cast<std::size_t>(nx)].right = b;
        out[static_cast<std::size_t>(ny)].left = nx;
        out[static_cast<std::size_t>(ny)].right = c;
        return ny;
    };
    emit(tree.root());
    return BinaryTree(std::move(out));
}

// Upper covers of sigma: one rotation on its decreasing tree, read back
// in-order. Sorted lexicographically.
inline std::vector<Permutation> tamari_covers(const Permutation& sigma,
                                              RotationOrientation dir = tamari_orientation) {
    BinaryTree t = perm_to_tree(sigma).shape();
    std::vector<Permutation> out;
    for (int x = 0; x < static_cast<int>(t.size()); ++x)
        if (auto r = rotate(t, x, dir)) out.push_back(tree_to_perm(*r));
    std::sort(out.begin(), out.end());
    return out;
}

class TamariPoset {
public:
    explicit TamariPoset(std::size_t n, RotationOrientation dir = tamari_orientation)
        : n_(n), elements_(avoiders_132(n)) {
        index_.reserve(elements_.size());
        for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
        up_.resize(elements_.size());
        down_.resize(elements_.size());
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            for (const auto& c : tamari_covers(elements_[i], dir)) {
                std::size_t j = index_.at(c);
                up_[i].push_back(j);
                down_[j].push_back(i);
            }
        }
    }

    std::size_t n() const { return n_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<Permutation>& elements() const { return elements_; }
    const Permutation& element(std::size_t i) const { return elements_.at(i); }

    std::size_t index_of(const Permutation& sigma) const {
        auto it = index_.find(sigma);
        if (it == index_.end()) throw not_found("permutation " + sigma.to_string() + " is not in the poset");
        return it->second;
    }

    const std::vector<std::size_t>& upper_covers(std::size_t i) const { return up_.at(i); }
    const std::vector<std::size_t>& lower_covers(std::size_t i) const { return down_.at(i); }

    // Principal filter / ideal as membership masks (breadth-first search).
    std::vector<bool> up_set(std::size_t i) const { return reach(i, up_); }
    std::vector<bool> down_set(std::size_t i) const { return reach(i, down_); }

    bool leq(std::size_t i, std::size_t j) const {
        if (i == j) return true;
        std::vector<bool> seen(size(), false);
        std::deque<std::size_t> queue{i};
        seen[i] = true;
        while (!queue.empty()) {
            std::size_t u = queue.front();
            queue.pop_front();
            for (std::size_t v : up_[u]) {
                if (v == j) return true;
                if (!seen[v]) {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        return false;
    }

    bool leq(const Permutation& a, const Permutation& b) const { return leq(index_of(a), index_of(b)); }

    // Elements of [a, b], lexicographically sorted (empty unless a <= b).
    std::vector<Permutation> interval(const Permutation& a, const Permutation& b) const {
        auto up = up_set(index_of(a));
        auto down = down_set(index_of(b));
        std::vector<Permutation> out;
        for (std::size_t i = 0; i < size(); ++i)
            if (up[i] && down[i]) out.push_back(elements_[i]);
        return out;
    }

    std::vector<std::size_t> minimal_elements() const { return sinks(down_); }
    std::vector<std::size_t> maximal_elements() const { return sinks(up_); }

    // Kahn's algorithm on the cover graph.
    bool is_acyclic() const {
        std::vector<std::size_t> indeg(size(), 0);
        for (const auto& outs : up_)
            for (std::size_t v : outs) ++indeg[v];
        std::deque<std::size_t> queue;
        for (std::size_t i = 0; i < size(); ++i)
            if (indeg[i] == 0) queue.push_back(i);
        std::size_t visited = 0;
        while (!queue.empty()) {
            std::size_t u = queue.front();
            queue.pop_front();
            ++visited;
            for (std::size_t v : up_[u])
                if (--indeg[v] == 0) queue.push_back(v);
        }
        return visited == size();
    }

    // Least upper bound, if one exists.
    std::optional<std::size_t> join(std::size_t i, std::size_t j) const { return bound(i, j, up_); }
    // Greatest lower bound, if one exists.
    std::optional<std::size_t> meet(std::size_t i, std::size_t j) const { return bound(i, j, down_); }

private:
    using Adjacency = std::vector<std::vector<std::size_t>>;

    std::vector<bool> reach(std::size_t i, const Adjacency& adj) const {
        std::vector<bool> seen(size(), false);
        std::deque<std::size_t> queue{i};
        seen.at(i) = true;
        while (!queue.empty()) {
            std::size_t u = queue.front();
            queue.pop_front();
            for (std::size_t v : adj[u])
                if (!seen[v]) {
                    seen[v] = true;
                    queue.push_back(v);
                }
        }
        return seen;
    }

    std::vector<std::size_t> sinks(const Adjacency& adj) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < size(); ++i)
            if (adj[i].empty()) out.push_back(i);
        return out;
    }

    // Common bounds in direction `adj`; the extreme one must reach every
    // other common bound.
    std::optional<std::size_t> bound(std::size_t i, std::size_t j, const Adjacency& adj) const {
        auto a = reach(i, adj);
        auto b = reach(j, adj);
        std::vector<std::size_t> common;
        for (std::size_t u = 0; u < size(); ++u)
            if (a[u] && b[u]) common.push_back(u);
        for (std::size_t c : common) {
            auto r = reach(c, adj);
            if (std::all_of(common.begin(), common.end(), [&](std::size_t u) { return r[u]; })) return c;
        }
        return std::nullopt;
    }

    std::size_t n_;
    std::vector<Permutation> elements_;
    std::unordered_map<Permutation, std::size_t> index_;
    Adjacency up_;
    Adjacency down_;
};

inline constexpr std::size_t max_cached_poset_size = 10;

// Shared immutable poset per n in the default orientation.
inline const TamariPoset& tamari_poset(std::size_t n) {
    if (n > max_cached_poset_size) throw std::out_of_range("tamari posets are cached for n <= 10 only");
    static std::mutex mutex;
    static std::map<std::size_t, std::unique_ptr<TamariPoset>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<TamariPoset>(n);
    return *slot;
}

inline bool tamari_leq(const Permutation& sigma, const Permutation& tau) {
    if (sigma.size() != tau.size()) throw invalid_input("tamari_leq: permutations have different lengths");
    require_132_avoiding(sigma);
    require_132_avoiding(tau);
    return tamari_poset(sigma.size()).leq(sigma, tau);
}

// ---------------------------------------------------------------------------
// The sets S(n, k)
// ---------------------------------------------------------------------------

// S(n, 0) is empty: every position matches the all-zero pattern.
inline std::vector<Permutation> s_set(std::size_t n, std::size_t k) {
    std::vector<Permutation> out;
    if (k == 0) return out;
    const MeshPattern p{0, static_cast<int>(k), 0, 0};
    for_each_avoider_132(n, [&](std::span<const int> w) {
        if (mmp(p, w) == 0) out.emplace_back(std::vector<int>(w.begin(), w.end()));
    });
    return out;
}

inline std::vector<Permutation> set_difference(const std::vector<Permutation>& a, const std::vector<Permutation>& b) {
    std::vector<Permutation> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Removes the entry 1 from each element of S(n, k) \ S(n, k-1) and packs.
inline std::vector<Permutation> s_set_difference_projection(std::size_t n, std::size_t k) {
    if (n < 2 || k < 1 || k > n) throw invalid_input("s_set_difference_projection: need n >= 2 and 1 <= k <= n");
    std::vector<Permutation> out;
    for (const auto& sigma : set_difference(s_set(n, k), s_set(n, k - 1)))
        out.push_back(remove_and_pack(sigma, sigma.position_of(1)));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Descent classes
// ---------------------------------------------------------------------------

enum class Extreme { smallest, greatest };

inline std::vector<std::size_t> descent_class(const TamariPoset& poset, const Composition& c) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < poset.size(); ++i)
        if (descent_composition(poset.element(i)) == c) out.push_back(i);
    return out;
}

// The element of the class lying below (or above) every other member.
// Returns nullopt if the class has no such element.
inline std::optional<std::size_t> class_extreme(const TamariPoset& poset, const std::vector<std::size_t>& members,
                                                Extreme which) {
    for (std::size_t c : members) {
        auto r = which == Extreme::smallest ? poset.up_set(c) : poset.down_set(c);
        if (std::all_of(members.begin(), members.end(), [&](std::size_t m) { return r[m]; })) return c;
    }
    return std::nullopt;
}

inline Permutation extreme_of_descent_class(const Composition& c, Extreme which) {
    const auto& poset = tamari_poset(static_cast<std::size_t>(c.total()));
    auto members = descent_class(poset, c);
    std::ostringstream name;
    name << c;
    if (members.empty()) throw not_found("no 132-avoiding permutation has descent composition " + name.str());
    auto e = class_extreme(poset, members, which);
    if (!e) throw not_found("descent class " + name.str() + " has no Tamari extreme");
    return poset.element(*e);
}

// All compositions of n, in lexicographic order of parts.
inline std::vector<Composition> compositions(std::size_t n) {
    std::vector<Composition> out;
    if (n == 0) return {Composition{}};
    for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
        std::vector<int> parts;
        int run = 1;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (mask & (std::size_t{1} << (n - 2 - i))) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        out.emplace_back(std::move(parts));
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct DescentClassReport {
    std::size_t n = 0;
    std::size_t nonempty_classes = 0;
    std::size_t interval_classes = 0;  // class equals [s(I), t(I)]
    std::vector<Composition> without_extremes;
    std::vector<Composition> not_intervals;
    bool pass() const { return without_extremes.empty() && not_intervals.empty(); }
};

// Checks that each nonempty descent class has a smallest and greatest
// element and coincides with the interval between them.
inline DescentClassReport verify_descent_classes(std::size_t n) {
    const auto& poset = tamari_poset(n);
    DescentClassReport rep{n, 0, 0, {}, {}};
    for (const auto& c : compositions(n)) {
        auto members = descent_class(poset, c);
        if (members.empty()) continue;
        ++rep.nonempty_classes;
        auto lo = class_extreme(poset, members, Extreme::smallest);
        auto hi = class_extreme(poset, members, Extreme::greatest);
        if (!lo || !hi) {
            rep.without_extremes.push_back(c);
            continue;
        }
        auto iv = poset.interval(poset.element(*lo), poset.element(*hi));
        std::vector<Permutation> cls;
        for (std::size_t m : members) cls.push_back(poset.element(m));
        if (iv == cls) ++rep.interval_classes;
        else rep.not_intervals.push_back(c);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Interval and ideal structure of S(n, k)
// ---------------------------------------------------------------------------

inline Composition hook_composition(std::size_t n, std::size_t k) {
    std::vector<int> parts(k - 1, 1);
    parts.push_back(static_cast<int>(n - k + 1));
    return Composition(std::move(parts));
}

// (k-1, n-k+1), degenerating to (n) for k = 1.
inline Composition two_part_composition(std::size_t n, std::size_t k) {
    if (k == 1) return Composition{static_cast<int>(n)};
    return Composition{static_cast<int>(k - 1), static_cast<int>(n - k + 1)};
}

struct IntervalBlock {
    std::size_t j = 0;  // the block S(n, j) \ S(n, j-1)
    Permutation bottom;
    Permutation top;
    std::size_t size = 0;
    bool matches = false;
};

struct IntervalReport {
    std::size_t n = 0;
    std::size_t k = 0;
    Permutation top;             // t(1^{k-1}, n-k+1)
    bool ideal_matches = false;  // S(n, k) = [id, top]
    std::vector<IntervalBlock> blocks;
    std::string witness;  // first discrepancy, empty on success

    bool pass() const {
        return ideal_matches && std::all_of(blocks.begin(), blocks.end(), [](const auto& b) { return b.matches; });
    }
};

// Checks S(n, k) = [id, t(1^{k-1}, n-k+1)] and, for every j <= k,
// S(n, j) \ S(n, j-1) = [s(j-1, n-j+1), t(1^{j-1}, n-j+1)].
inline IntervalReport verify_interval_structure(std::size_t n, std::size_t k) {
    if (n < 1 || k < 1 || k > n) throw invalid_input("verify_interval_structure: need 1 <= k <= n");
    const auto& poset = tamari_poset(n);
    IntervalReport rep;
    rep.n = n;
    rep.k = k;
    rep.top = extreme_of_descent_class(hook_composition(n, k), Extreme::greatest);
    auto sk = s_set(n, k);
    rep.ideal_matches = poset.interval(Permutation::identity(n), rep.top) == sk;
    if (!rep.ideal_matches) rep.witness = "S(" + std::to_string(n) + "," + std::to_string(k) + ") is not [id, t]";
    for (std::size_t j = 1; j <= k; ++j) {
        IntervalBlock b;
        b.j = j;
        b.bottom = extreme_of_descent_class(two_part_composition(n, j), Extreme::smallest);
        b.top = extreme_of_descent_class(hook_composition(n, j), Extreme::greatest);
        auto block = set_difference(s_set(n, j), s_set(n, j - 1));
        b.size = block.size();
        b.matches = poset.interval(b.bottom, b.top) == block;
        if (!b.matches && rep.witness.empty())
            rep.witness = "block j=" + std::to_string(j) + " differs from [" + b.bottom.to_string() + ", " +
                          b.top.to_string() + "]";
        rep.blocks.push_back(std::move(b));
    }
    return rep;
}

struct IdealReport {
    std::size_t n = 0, k = 0, ell = 0;
    std::size_t members = 0;
    bool downward_closed = false;
    bool upward_closed = false;
    // A member with a lower cover outside the set, if any.
    std::optional<std::pair<Permutation, Permutation>> down_witness;
};

// I(n, k, ell) = { sigma in S_n(132) : mmp((0,k,0,0))(sigma) <= ell }.
inline IdealReport verify_ideal(std::size_t n, std::size_t k, std::size_t ell) {
    const auto& poset = tamari_poset(n);
    const MeshPattern p{0, static_cast<int>(k), 0, 0};
    std::vector<bool> in(poset.size());
    IdealReport rep{n, k, ell, 0, true, true, std::nullopt};
    for (std::size_t i = 0; i < poset.size(); ++i) {
        in[i] = static_cast<std::size_t>(mmp(p, poset.element(i))) <= ell;
        rep.members += in[i];
    }
    for (std::size_t i = 0; i < poset.size(); ++i) {
        if (!in[i]) continue;
        for (std::size_t j : poset.lower_covers(i)) {
            if (!in[j]) {
                if (rep.downward_closed) rep.down_witness.emplace(poset.element(i), poset.element(j));
                rep.downward_closed = false;
            }
        }
        for (std::size_t j : poset.upper_covers(i))
            if (!in[j]) rep.upward_closed = false;
    }
    return rep;
}

// Tries both rotation directions on S_6(132) and returns the one for which
// S(6, 4) is the interval [123456, 654123].
inline RotationOrientation select_orientation() {
    const Permutation bottom{1, 2, 3, 4, 5, 6};
    const Permutation top{6, 5, 4, 1, 2, 3};
    const auto target = s_set(6, 4);
    std::vector<RotationOrientation> ok;
    for (auto dir : {RotationOrientation::right_rotation_up, RotationOrientation::left_rotation_up}) {
        TamariPoset poset(6, dir);
        if (poset.interval(bottom, top) == target) ok.push_back(dir);
    }
    if (ok.size() != 1) throw not_found("rotation orientation is not uniquely determined");
    return ok.front();
}

}  // namespace meshpat
