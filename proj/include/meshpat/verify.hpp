#pragma once

// Exhaustive verification runs, one per identity: each walks every
// 132-avoiding permutation of length 1..max_n (or every table entry) and
// stops at the first counterexample.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bijections.hpp"
#include "distribution.hpp"
#include "tamari.hpp"
#include "triangles.hpp"

namespace meshpat {

struct VerificationReport {
    std::string id;
    std::string statement;
    std::size_t max_n = 0;
    std::size_t checked = 0;
    std::optional<std::string> counterexample;

    bool pass() const { return !counterexample; }

    std::string to_string() const {
        std::ostringstream os;
        os << "theorem " << id << ": " << statement << '\n';
        os << "  max_n = " << max_n << ", instances checked = " << checked << '\n';
        os << "  result: " << (pass() ? "PASS" : "FAIL") << '\n';
        if (counterexample) os << "  first counterexample: " << *counterexample << '\n';
        return os.str();
    }
};

namespace detail {

// Collects check results; only the first failure is kept.
class Checker {
public:
    Checker(std::string id, std::string statement, std::size_t max_n) {
        report_.id = std::move(id);
        report_.statement = std::move(statement);
        report_.max_n = max_n;
    }

    void check(bool ok, const std::function<std::string()>& describe) {
        ++report_.checked;
        if (!ok && !report_.counterexample) report_.counterexample = describe();
    }

    bool failed() const { return !report_.pass(); }
    VerificationReport take() { return std::move(report_); }

private:
    VerificationReport report_;
};

inline std::string join_values(const std::vector<Integer>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].to_string();
    return out;
}

template <typename F>
void for_each_avoider_up_to(std::size_t max_n, F&& visit) {
    for (std::size_t n = 1; n <= max_n; ++n)
        for (const auto& sigma : avoiders_132(n)) visit(sigma);
}

inline std::string describe(const Permutation& sigma, std::size_t ell, long lhs, long rhs) {
    std::ostringstream os;
    os << "sigma=" << sigma << " ell=" << ell << ": " << lhs << " != " << rhs;
    return os.str();
}

inline std::string describe_rows(std::size_t n, const std::vector<Integer>& a, const std::vector<Integer>& b) {
    return "n=" + std::to_string(n) + ": [" + join_values(a) + "] != [" + join_values(b) + "]";
}

// Non-decreasing parking functions of length n, generated independently of phi.
inline void all_parking_functions(std::size_t n, std::vector<int>& prefix,
                                  std::vector<NonDecreasingParkingFunction>& out) {
    if (prefix.size() == n) {
        out.emplace_back(prefix);
        return;
    }
    int lo = prefix.empty() ? 1 : prefix.back();
    for (int v = lo; v <= static_cast<int>(prefix.size() + 1); ++v) {
        prefix.push_back(v);
        all_parking_functions(n, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace detail

inline std::vector<NonDecreasingParkingFunction> all_parking_functions(std::size_t n) {
    std::vector<NonDecreasingParkingFunction> out;
    std::vector<int> prefix;
    detail::all_parking_functions(n, prefix, out);
    return out;
}

inline VerificationReport verify_dyck_transport(std::size_t max_n) {
    detail::Checker c("2.1", "mmp(l,0,0,0) equals the number of Dyck down steps ending at height >= l", max_n);
    detail::for_each_avoider_up_to(max_n, [&](const Permutation& sigma) {
        DyckPath path = perm_to_dyck(sigma);
        c.check(dyck_to_perm(path) == sigma, [&] { return "dyck round trip fails for " + sigma.to_string(); });
        for (std::size_t ell = 1; ell <= sigma.size(); ++ell) {
            int lhs = mmp({static_cast<int>(ell), 0, 0, 0}, sigma);
            int rhs = down_steps_ending_at_or_above(path, static_cast<int>(ell));
            c.check(lhs == rhs, [&] { return detail::describe(sigma, ell, lhs, rhs); });
        }
    });
    return c.take();
}

inline std::vector<Integer> catalan_triangle_row(std::size_t n) {
    std::vector<Integer> row;
    for (std::size_t k = 1; k <= n; ++k) row.push_back(catalan_triangle(n, k));
    return row;
}

inline std::vector<Integer> narayana_row(std::size_t n) {
    std::vector<Integer> row;
    for (std::size_t k = 1; k <= n; ++k) row.push_back(narayana(n, k));
    return row;
}

// Coefficient of x^k is the Catalan triangle entry (n, k+1).
inline VerificationReport verify_catalan_triangle_rows(std::size_t max_n, const std::string& id,
                                                       const MeshPattern& p) {
    detail::Checker c(id, "Q_n^" + [&] {
        std::ostringstream os;
        os << p;
        return os.str();
    }() + "(x) has the Catalan triangle row n as coefficients", max_n);
    for (std::size_t n = 1; n <= max_n; ++n) {
        auto q = q_polynomial(n, p).coeffs;
        auto row = catalan_triangle_row(n);
        c.check(q == row, [&] { return detail::describe_rows(n, q, row); });
    }
    return c.take();
}

inline VerificationReport verify_first_value(std::size_t max_n) {
    detail::Checker c("3.1", "mmp(0,1,0,0)(sigma) = sigma_1 - 1", max_n);
    detail::for_each_avoider_up_to(max_n, [&](const Permutation& sigma) {
        int lhs = mmp({0, 1, 0, 0}, sigma);
        c.check(lhs == sigma.at(1) - 1, [&] { return detail::describe(sigma, 1, lhs, sigma.at(1) - 1); });
    });
    return c.take();
}

inline VerificationReport verify_suffix_pack(std::size_t max_n) {
    detail::Checker c("3.2", "mmp(0,l,0,0)(sigma) + 1 is the first value of pack(sigma_l ... sigma_n)", max_n);
    detail::for_each_avoider_up_to(max_n, [&](const Permutation& sigma) {
        for (std::size_t ell = 1; ell <= sigma.size(); ++ell) {
            int lhs = mmp({0, static_cast<int>(ell), 0, 0}, sigma) + 1;
            int rhs = suffix_pack_first_value(sigma, ell);
            c.check(lhs == rhs, [&] { return detail::describe(sigma, ell, lhs, rhs); });
        }
    });
    return c.take();
}

inline VerificationReport verify_phi_bijection(std::size_t max_n) {
    detail::Checker c("3.3", "phi is a bijection onto non-decreasing parking functions", max_n);
    for (std::size_t n = 1; n <= max_n; ++n) {
        std::set<std::vector<int>> images;
        for (const auto& sigma : avoiders_132(n)) {
            // Constructing the parking function validates its invariants.
            std::optional<NonDecreasingParkingFunction> f;
            try {
                f = phi(sigma);
            } catch (const invalid_input& e) {
                c.check(false, [&] { return "phi(" + sigma.to_string() + ") invalid: " + e.what(); });
                continue;
            }
            c.check(phi_inverse(*f) == sigma, [&] { return "phi round trip fails for " + sigma.to_string(); });
            c.check(f->at(n) == sigma.at(1), [&] { return "last entry of phi differs from sigma_1 for " + sigma.to_string(); });
            images.emplace(f->values().begin(), f->values().end());
        }
        auto all = all_parking_functions(n);
        c.check(images.size() == all.size(), [&] {
            return "n=" + std::to_string(n) + ": " + std::to_string(images.size()) + " images but " +
                   std::to_string(all.size()) + " parking functions";
        });
        for (const auto& f : all) {
            Permutation sigma = phi_inverse(f);
            c.check(avoids_132(sigma) && phi(sigma) == f,
                    [&] { return "phi(phi_inverse(" + f.to_string() + ")) differs"; });
        }
    }
    return c.take();
}

inline std::size_t q_zero_brute_force(std::size_t n, std::size_t k) {
    std::size_t count = 0;
    const MeshPattern p{0, static_cast<int>(k), 0, 0};
    for_each_avoider_132(n, [&](std::span<const int> w) { count += mmp(p, w) == 0; });
    return count;
}

inline VerificationReport verify_q_zero(std::size_t max_n, const std::string& id) {
    const bool partial = id == "3.5";
    detail::Checker c(id,
                      partial ? "Q_n^(0,k,0,0)(0) is the sum of the first k entries of Catalan triangle row n"
                              : "Q_n^(0,k,0,0)(0) satisfies the three-case recurrence",
                      max_n);
    QZeroRecurrence rec(max_n, max_n + 1);
    for (std::size_t n = 1; n <= max_n; ++n) {
        for (std::size_t k = 1; k <= max_n + 1; ++k) {
            Integer brute = q_zero_brute_force(n, k);
            Integer v = partial ? q_zero_partial_sum(n, k) : rec(n, k);
            c.check(brute == v, [&] {
                return "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + brute.to_string() +
                       " != " + v.to_string();
            });
        }
    }
    return c.take();
}

inline VerificationReport verify_narayana(std::size_t max_n) {
    detail::Checker c("4.1", "coefficient of x^k in Q_n^(0,0,1,0) is N(n, k+1)", max_n);
    for (std::size_t n = 1; n <= max_n; ++n) {
        auto q = q_polynomial(n, {0, 0, 1, 0}).coeffs;
        auto row = narayana_row(n);
        c.check(q == row, [&] { return detail::describe_rows(n, q, row); });
    }
    return c.take();
}

inline VerificationReport verify_left_subtrees(std::size_t max_n, bool only_ell_one) {
    detail::Checker c(only_ell_one ? "4.2" : "4.4",
                      only_ell_one ? "mmp(0,0,1,0) counts left branches of the decreasing tree"
                                   : "mmp(0,0,l,0) counts left subtrees with at least l nodes",
                      max_n);
    detail::for_each_avoider_up_to(max_n, [&](const Permutation& sigma) {
        BinaryTree t = perm_to_tree(sigma);
        c.check(tree_to_perm(t) == sigma, [&] { return "tree round trip fails for " + sigma.to_string(); });
        c.check(tree_to_perm(t.shape()) == sigma,
                [&] { return "canonical labeling differs for " + sigma.to_string(); });
        std::size_t top = only_ell_one ? 1 : sigma.size();
        for (std::size_t ell = 1; ell <= top; ++ell) {
            int lhs = mmp({0, 0, static_cast<int>(ell), 0}, sigma);
            int rhs = left_subtrees_at_least(t, ell);
            c.check(lhs == rhs, [&] { return detail::describe(sigma, ell, lhs, rhs); });
        }
    });
    return c.take();
}

inline VerificationReport verify_order_structure(std::size_t max_n) {
    detail::Checker c("props-3.7-3.9",
                      "S(n,k) = {1 in position <= k}; S(n,k)\\S(n,k-1) projects onto S(n-1,k); "
                      "S(n,k) is a union of Tamari intervals; I(n,k,l) is an order ideal",
                      max_n);
    for (std::size_t n = 1; n <= max_n; ++n) {
        for (std::size_t k = 1; k <= n; ++k) {
            auto s = s_set(n, k);
            std::vector<Permutation> by_position;
            for (const auto& sigma : avoiders_132(n)) {
                if (sigma.position_of(1) <= k) by_position.push_back(sigma);
            }
            c.check(s == by_position, [&] {
                return "S(" + std::to_string(n) + "," + std::to_string(k) + ") differs from position rule";
            });
            for (const auto& sigma : s) {
                const Composition comp = descent_composition(sigma);
                c.check(comp.parts().back() >= static_cast<int>(n + 1 - k),
                        [&] { return "descent composition of " + sigma.to_string() + " ends too early"; });
            }
            if (n >= 2)
                c.check(s_set_difference_projection(n, k) == s_set(n - 1, k), [&] {
                    return "projection of S(" + std::to_string(n) + "," + std::to_string(k) + ") block differs";
                });
            auto rep = verify_interval_structure(n, k);
            c.check(rep.pass(), [&] { return rep.witness; });
            for (std::size_t ell = 0; ell <= n; ++ell) {
                auto ideal = verify_ideal(n, k, ell);
                c.check(ideal.downward_closed, [&] {
                    return "I(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(ell) +
                           ") not downward closed at " + ideal.down_witness->first.to_string();
                });
            }
        }
    }
    return c.take();
}

inline VerificationReport verify_rational_forms(std::size_t max_n) {
    detail::Checker c("eq-11", "series expansions of the closed forms for k = 1..4 match Q_n^(0,k,0,0)(0)", max_n);
    for (int k = 1; k <= 4; ++k) {
        auto series = expand_series(q_zero_rational_form(k), max_n);
        c.check(series[0] == Integer(1), [&] { return "constant term is not 1 for k=" + std::to_string(k); });
        for (std::size_t n = 1; n <= max_n; ++n) {
            Integer brute = q_zero_brute_force(n, static_cast<std::size_t>(k));
            c.check(series[n] == brute, [&] {
                return "k=" + std::to_string(k) + " n=" + std::to_string(n) + ": " + series[n].to_string() +
                       " != " + brute.to_string();
            });
        }
    }
    return c.take();
}

inline VerificationReport verify_convolution(std::size_t max_n) {
    detail::Checker c("eq-14", "Catalan convolution recurrence agrees with the direct count", max_n);
    QZeroConvolution conv(max_n, max_n + 1);
    for (std::size_t n = 1; n <= max_n; ++n) {
        for (std::size_t k = 1; k <= max_n + 1; ++k) {
            Integer brute = q_zero_brute_force(n, k);
            c.check(conv(n, k) == brute, [&] {
                return "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + conv(n, k).to_string() +
                       " != " + brute.to_string();
            });
        }
    }
    return c.take();
}

inline const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids{"2.1", "2.2", "3.1", "3.2", "3.3", "3.4", "3.5", "3.6",
                                              "4.1", "4.2", "4.4", "props-3.7-3.9", "eq-11", "eq-14"};
    return ids;
}

// Throws invalid_input for an unknown id.
inline VerificationReport verify_theorem(const std::string& id, std::size_t max_n) {
    if (id == "2.1") return verify_dyck_transport(max_n);
    if (id == "2.2") return verify_catalan_triangle_rows(max_n, "2.2", {1, 0, 0, 0});
    if (id == "3.4") return verify_catalan_triangle_rows(max_n, "3.4", {0, 1, 0, 0});
    if (id == "3.1") return verify_first_value(max_n);
    if (id == "3.2") return verify_suffix_pack(max_n);
    if (id == "3.3") return verify_phi_bijection(max_n);
    if (id == "3.5" || id == "3.6") return verify_q_zero(max_n, id);
    if (id == "4.1") return verify_narayana(max_n);
    if (id == "4.2") return verify_left_subtrees(max_n, true);
    if (id == "4.4") return verify_left_subtrees(max_n, false);
    if (id == "props-3.7-3.9") return verify_order_structure(max_n);
    if (id == "eq-11") return verify_rational_forms(max_n);
    if (id == "eq-14") return verify_convolution(max_n);
    throw invalid_input("unknown theorem id '" + id + "'");
}

}  // namespace meshpat
