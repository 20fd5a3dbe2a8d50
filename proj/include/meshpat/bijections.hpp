#pragma once

// Statistic-preserving bijections between 132-avoiding permutations and
//   - Dyck paths (Krattenthaler's construction),
//   - non-decreasing parking functions (quadrant II statistics),
//   - plane binary trees (decreasing trees read in-order).

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permutation.hpp"

namespace meshpat {

// ---------------------------------------------------------------------------
// Dyck paths
// ---------------------------------------------------------------------------

class DyckPath {
public:
    enum class Step : char { up = 'U', down = 'D' };

    DyckPath() = default;

    // Accepts the alphabet {U, D} or {1, 0}. Throws invalid_input when the
    // word is not a Dyck word.
    static DyckPath parse(std::string_view word) {
        std::vector<Step> steps;
        steps.reserve(word.size());
        for (char ch : word) {
            if (ch == 'U' || ch == '1') steps.push_back(Step::up);
            else if (ch == 'D' || ch == '0') steps.push_back(Step::down);
            else throw invalid_input(std::string("invalid Dyck step '") + ch + "'");
        }
        return DyckPath(std::move(steps));
    }

    explicit DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {
        if (steps_.size() % 2 != 0) throw invalid_input("Dyck path must have even length");
        int h = 0;
        for (Step s : steps_) {
            h += s == Step::up ? 1 : -1;
            if (h < 0) throw invalid_input("Dyck path falls below the axis");
        }
        if (h != 0) throw invalid_input("Dyck path does not return to the axis");
    }

    std::size_t semilength() const { return steps_.size() / 2; }
    std::span<const Step> steps() const { return steps_; }

    // Heights reached by each down step, in order.
    std::vector<int> down_step_heights() const {
        std::vector<int> out;
        out.reserve(semilength());
        int h = 0;
        for (Step s : steps_) {
            h += s == Step::up ? 1 : -1;
            if (s == Step::down) out.push_back(h);
        }
        return out;
    }

    std::string to_string() const {
        std::string out;
        out.reserve(steps_.size());
        for (Step s : steps_) out.push_back(static_cast<char>(s));
        return out;
    }

    // Rows from top to bottom, '/' for up steps and '\' for down steps.
    std::string draw() const {
        int h = 0, top = 0;
        for (Step s : steps_) top = std::max(top, h += s == Step::up ? 1 : -1);
        std::vector<std::string> rows(static_cast<std::size_t>(top), std::string(steps_.size(), ' '));
        h = 0;
        for (std::size_t i = 0; i < steps_.size(); ++i) {
            if (steps_[i] == Step::up) {
                rows[static_cast<std::size_t>(top - h - 1)][i] = '/';
                ++h;
            } else {
                --h;
                rows[static_cast<std::size_t>(top - h - 1)][i] = '\\';
            }
        }
        std::string out;
        for (auto& r : rows) {
            r.erase(r.find_last_not_of(' ') + 1);
            out += r + '\n';
        }
        return out;
    }

    friend bool operator==(const DyckPath&, const DyckPath&) = default;
    friend std::ostream& operator<<(std::ostream& os, const DyckPath& p) { return os << p.to_string(); }

private:
    std::vector<Step> steps_;
};

// For each i, the number of later entries larger than sigma_i.
inline std::vector<int> greater_on_right(std::span<const int> sigma) {
    std::vector<int> h(sigma.size(), 0);
    for (std::size_t i = 0; i < sigma.size(); ++i)
        for (std::size_t j = i + 1; j < sigma.size(); ++j)
            if (sigma[j] > sigma[i]) ++h[i];
    return h;
}

// Reading sigma left to right, each entry appends some up steps and one down
// step, landing at height #{j > i : sigma_j > sigma_i}.
inline DyckPath perm_to_dyck(const Permutation& sigma) {
    require_132_avoiding(sigma);
    std::vector<DyckPath::Step> steps;
    steps.reserve(2 * sigma.size());
    int height = 0;
    for (int target : greater_on_right(sigma.values())) {
        int ups = target + 1 - height;
        if (ups < 0) throw invalid_input("permutation is not 132-avoiding");
        steps.insert(steps.end(), static_cast<std::size_t>(ups), DyckPath::Step::up);
        steps.push_back(DyckPath::Step::down);
        height = target;
    }
    return DyckPath(std::move(steps));
}

// The down-step heights are the greater-on-right counts; rebuilding sigma
// from the right, each entry is inserted below exactly that many of the
// entries already placed.
inline Permutation dyck_to_perm(const DyckPath& path) {
    std::vector<int> h = path.down_step_heights();
    const std::size_t n = h.size();
    // Positions (0-based) of the suffix, sorted by increasing value.
    std::vector<std::size_t> by_value;
    by_value.reserve(n);
    for (std::size_t i = n; i-- > 0;) {
        std::size_t placed = by_value.size();
        by_value.insert(by_value.begin() + static_cast<std::ptrdiff_t>(placed - static_cast<std::size_t>(h[i])), i);
    }
    std::vector<int> values(n);
    for (std::size_t r = 0; r < n; ++r) values[by_value[r]] = static_cast<int>(r + 1);
    return Permutation(std::move(values));
}

inline int down_steps_ending_at_or_above(const DyckPath& path, int ell) {
    if (ell < 1) throw invalid_input("ell must be positive");
    auto heights = path.down_step_heights();
    return static_cast<int>(std::count_if(heights.begin(), heights.end(), [ell](int h) { return h >= ell; }));
}

// ---------------------------------------------------------------------------
// Non-decreasing parking functions
// ---------------------------------------------------------------------------

class NonDecreasingParkingFunction {
public:
    NonDecreasingParkingFunction() = default;

    explicit NonDecreasingParkingFunction(std::vector<int> values) : values_(std::move(values)) {
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (values_[i] < 1) throw invalid_input("parking function values must be positive");
            if (values_[i] > static_cast<int>(i + 1)) throw invalid_input("parking function requires f(i) <= i");
            if (i > 0 && values_[i] < values_[i - 1]) throw invalid_input("parking function must be non-decreasing");
        }
    }
    NonDecreasingParkingFunction(std::initializer_list<int> v) : NonDecreasingParkingFunction(std::vector<int>(v)) {}

    std::size_t size() const { return values_.size(); }
    std::span<const int> values() const { return values_; }
    // 1-based.
    int at(std::size_t i) const { return values_.at(i - 1); }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < values_.size(); ++i) out += (i ? "," : "") + std::to_string(values_[i]);
        return out;
    }

    friend bool operator==(const NonDecreasingParkingFunction&, const NonDecreasingParkingFunction&) = default;
    friend std::ostream& operator<<(std::ostream& os, const NonDecreasingParkingFunction& f) {
        return os << '(' << f.to_string() << ')';
    }

private:
    std::vector<int> values_;
};

// Entry j is 1 + the number of positions with at least n + 1 - j larger
// entries to their left.
inline NonDecreasingParkingFunction phi(const Permutation& sigma) {
    require_132_avoiding(sigma);
    const std::size_t n = sigma.size();
    auto v = sigma.values();
    // above_left[i] = number of larger entries to the left of position i.
    std::vector<int> count_at_least(n + 2, 0);
    for (std::size_t i = 0; i < n; ++i) {
        int above = 0;
        for (std::size_t j = 0; j < i; ++j) above += v[j] > v[i];
        ++count_at_least[static_cast<std::size_t>(above)];
    }
    // Suffix sums: count_at_least[k] = #{i : above_left(i) >= k}.
    for (std::size_t k = n; k-- > 0;) count_at_least[k] += count_at_least[k + 1];
    std::vector<int> f(n);
    for (std::size_t j = 1; j <= n; ++j) f[j - 1] = count_at_least[n + 1 - j] + 1;
    return NonDecreasingParkingFunction(std::move(f));
}

// Reads f left to right; each value v bumps every current entry >= v by one
// and is then prepended.
inline Permutation phi_inverse(const NonDecreasingParkingFunction& f) {
    std::vector<int> word;
    word.reserve(f.size());
    for (int v : f.values()) {
        for (int& x : word)
            if (x >= v) ++x;
        word.insert(word.begin(), v);
    }
    return Permutation(std::move(word));
}

// Positions i > 1 with f(i) = i.
inline std::vector<int> breakpoints(const NonDecreasingParkingFunction& f) {
    std::vector<int> out;
    for (std::size_t i = 2; i <= f.size(); ++i)
        if (f.at(i) == static_cast<int>(i)) out.push_back(static_cast<int>(i));
    return out;
}

// First entry of pack(sigma_ell ... sigma_n).
inline int suffix_pack_first_value(const Permutation& sigma, std::size_t ell) {
    if (ell < 1 || ell > sigma.size()) throw std::out_of_range("ell out of range");
    auto v = sigma.values();
    int first = v[ell - 1];
    int smaller = 0;
    for (std::size_t j = ell; j < v.size(); ++j) smaller += v[j] < first;
    return smaller + 1;
}

// ---------------------------------------------------------------------------
// Binary trees
// ---------------------------------------------------------------------------

// Plane binary tree stored as an arena in prefix (root, left, right) order,
// so node 0 is the root. Labels are 0 for an unlabeled shape.
class BinaryTree {
public:
    static constexpr int none = -1;

    struct Node {
        int left = none;
        int right = none;
        int label = 0;
        friend bool operator==(const Node&, const Node&) = default;
    };

    BinaryTree() = default;

    // Builds from an arena; throws invalid_input if it is not a tree in
    // prefix order or if labels are partially assigned.
    explicit BinaryTree(std::vector<Node> nodes) : nodes_(std::move(nodes)) { validate(); }

    // Balanced-parenthesis encoding: empty -> "", node -> "(" left ")" right.
    static BinaryTree parse_shape(std::string_view word) {
        std::vector<Node> nodes;
        std::size_t pos = 0;
        std::function<int()> parse = [&]() -> int {
            if (pos == word.size() || word[pos] == ')') return none;
            if (word[pos] != '(') throw invalid_input("tree shape: unexpected character");
            ++pos;
            int self = static_cast<int>(nodes.size());
            nodes.emplace_back();
            int l = parse();
            if (pos == word.size() || word[pos] != ')') throw invalid_input("tree shape: unbalanced parentheses");
            ++pos;
            int r = parse();
            nodes[static_cast<std::size_t>(self)].left = l;
            nodes[static_cast<std::size_t>(self)].right = r;
            return self;
        };
        parse();
        if (pos != word.size()) throw invalid_input("tree shape: trailing characters");
        return BinaryTree(std::move(nodes));
    }

    static BinaryTree left_comb(std::size_t n) {
        std::vector<Node> nodes(n);
        for (std::size_t i = 0; i + 1 < n; ++i) nodes[i].left = static_cast<int>(i + 1);
        return BinaryTree(std::move(nodes));
    }

    static BinaryTree right_comb(std::size_t n) {
        std::vector<Node> nodes(n);
        for (std::size_t i = 0; i + 1 < n; ++i) nodes[i].right = static_cast<int>(i + 1);
        return BinaryTree(std::move(nodes));
    }

    std::size_t size() const { return nodes_.size(); }
    bool empty() const { return nodes_.empty(); }
    int root() const { return nodes_.empty() ? none : 0; }
    const Node& node(int i) const { return nodes_.at(static_cast<std::size_t>(i)); }
    std::span<const Node> nodes() const { return nodes_; }
    bool is_labeled() const { return !nodes_.empty() && nodes_[0].label != 0; }

    // Number of nodes in the subtree rooted at i (0 for none).
    std::size_t subtree_size(int i) const {
        if (i == none) return 0;
        const Node& nd = node(i);
        return 1 + subtree_size(nd.left) + subtree_size(nd.right);
    }

    BinaryTree shape() const {
        BinaryTree t = *this;
        for (auto& nd : t.nodes_) nd.label = 0;
        return t;
    }

    std::string shape_string() const {
        std::string out;
        std::function<void(int)> walk = [&](int i) {
            if (i == none) return;
            out += '(';
            walk(node(i).left);
            out += ')';
            walk(node(i).right);
        };
        walk(root());
        return out;
    }

    // Labels n, n-1, ..., 1 in prefix order; the arena is already in prefix
    // order, so node i receives n - i.
    BinaryTree with_canonical_labels() const {
        BinaryTree t = *this;
        const int n = static_cast<int>(t.nodes_.size());
        for (int i = 0; i < n; ++i) t.nodes_[static_cast<std::size_t>(i)].label = n - i;
        return t;
    }

    // Labels in in-order (left, root, right).
    std::vector<int> inorder_labels() const {
        std::vector<int> out;
        out.reserve(size());
        std::function<void(int)> walk = [&](int i) {
            if (i == none) return;
            walk(node(i).left);
            out.push_back(node(i).label);
            walk(node(i).right);
        };
        walk(root());
        return out;
    }

    // Sideways rendering, right subtree on top.
    std::string draw() const {
        std::string out;
        std::function<void(int, int)> walk = [&](int i, int depth) {
            if (i == none) return;
            walk(node(i).right, depth + 1);
            out += std::string(static_cast<std::size_t>(4 * depth), ' ');
            out += is_labeled() ? std::to_string(node(i).label) : std::string("o");
            out += '\n';
            walk(node(i).left, depth + 1);
        };
        walk(root(), 0);
        return out;
    }

    friend bool operator==(const BinaryTree&, const BinaryTree&) = default;

private:
    void validate() const {
        const int n = static_cast<int>(nodes_.size());
        int next = 0;
        bool labeled = n > 0 && nodes_[0].label != 0;
        std::function<void(int)> walk = [&](int i) {
            if (i == none) return;
            if (i != next || i >= n) throw invalid_input("binary tree arena is not in prefix order");
            ++next;
            const Node& nd = nodes_[static_cast<std::size_t>(i)];
            if ((nd.label != 0) != labeled) throw invalid_input("binary tree is partially labeled");
            walk(nd.left);
            walk(nd.right);
        };
        if (n > 0) walk(0);
        if (next != n) throw invalid_input("binary tree arena has unreachable nodes");
    }

    std::vector<Node> nodes_;
};

// Root holds the maximum; the prefix before it builds the left subtree and
// the suffix after it the right subtree.
inline BinaryTree perm_to_tree(const Permutation& sigma) {
    require_132_avoiding(sigma);
    std::vector<BinaryTree::Node> nodes;
    nodes.reserve(sigma.size());
    auto v = sigma.values();
    std::function<int(std::size_t, std::size_t)> build = [&](std::size_t lo, std::size_t hi) -> int {
        if (lo == hi) return BinaryTree::none;
        std::size_t m = static_cast<std::size_t>(std::max_element(v.begin() + static_cast<std::ptrdiff_t>(lo),
                                                                  v.begin() + static_cast<std::ptrdiff_t>(hi)) -
                                                 v.begin());
        int self = static_cast<int>(nodes.size());
        nodes.push_back({BinaryTree::none, BinaryTree::none, v[m]});
        int l = build(lo, m);
        int r = build(m + 1, hi);
        nodes[static_cast<std::size_t>(self)].left = l;
        nodes[static_cast<std::size_t>(self)].right = r;
        return self;
    };
    build(0, v.size());
    return BinaryTree(std::move(nodes));
}

inline BinaryTree canonical_decreasing_labels(const BinaryTree& shape) { return shape.with_canonical_labels(); }

// In-order reading of a decreasing tree. Unlabeled shapes get the canonical
// labeling first.
inline Permutation tree_to_perm(const BinaryTree& tree) {
    if (tree.empty()) return {};
    if (!tree.is_labeled()) return tree_to_perm(tree.with_canonical_labels());
    for (const auto& nd : tree.nodes()) {
        for (int child : {nd.left, nd.right})
            if (child != BinaryTree::none && tree.node(child).label >= nd.label)
                throw invalid_input("tree labels are not decreasing");
    }
    return Permutation(tree.inorder_labels());
}

// Number of nodes whose left subtree has at least `ell` nodes.
inline int left_subtrees_at_least(const BinaryTree& tree, std::size_t ell) {
    if (ell < 1) throw invalid_input("ell must be positive");
    int count = 0;
    std::function<std::size_t(int)> walk = [&](int i) -> std::size_t {
        if (i == BinaryTree::none) return 0;
        std::size_t l = walk(tree.node(i).left);
        std::size_t r = walk(tree.node(i).right);
        if (l >= ell) ++count;
        return 1 + l + r;
    };
    walk(tree.root());
    return count;
}

// All plane binary tree shapes with n nodes, ordered by left subtree size
// and then recursively.
inline std::vector<BinaryTree> all_tree_shapes(std::size_t n) {
    // Shapes as balanced-parenthesis words; the arena is rebuilt at the end.
    std::vector<std::vector<std::string>> words(n + 1);
    words[0] = {""};
    for (std::size_t m = 1; m <= n; ++m)
        for (std::size_t l = 0; l < m; ++l)
            for (const auto& lw : words[l])
                for (const auto& rw : words[m - 1 - l]) words[m].push_back("(" + lw + ")" + rw);
    std::vector<BinaryTree> out;
    out.reserve(words[n].size());
    for (const auto& w : words[n]) out.push_back(BinaryTree::parse_shape(w));
    return out;
}

}  // namespace meshpat
