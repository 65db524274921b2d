#pragma once

/**
 * @file rootsys.hpp
 * @brief Finite Cartan matrices: Dynkin classification, positive roots, a canonical reduced
 * word for the longest Weyl group element and the convex order of positive roots it induces.
 *
 * Conventions: the simple reflection s_i acts on root coefficient vectors by
 * s_i(beta) = beta - <beta, alpha_i^vee> alpha_i with <beta, alpha_i^vee> = sum_j beta_j a_ij,
 * so s_i(alpha_j) = alpha_j - a_ij alpha_i. Vertices are 0-based internally.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pointed/error.hpp"
#include "pointed/exactfield.hpp"
#include "pointed/square_matrix.hpp"

namespace pointed {

using Root = std::vector<int>;

inline std::string to_string(const Root& r) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << ")";
    return os.str();
}

inline int height(const Root& beta) {
    int h = 0;
    for (int b : beta) h += b;
    return h;
}

struct DynkinType {
    char family = 'A';
    int rank = 1;

    std::string label() const { return std::string(1, family) + "_" + std::to_string(rank); }

    /// Classical count of positive roots.
    int positive_root_count() const {
        const int n = rank;
        switch (family) {
            case 'A': return n * (n + 1) / 2;
            case 'B':
            case 'C': return n * n;
            case 'D': return n * (n - 1);
            case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
            case 'F': return 24;
            case 'G': return 6;
        }
        return 0;
    }

    friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

/// One connected component of the Dynkin diagram.
struct DynkinComponent {
    std::vector<int> vertices;  ///< sorted ascending
    DynkinType type;
    std::vector<int> labeling;  ///< labeling[k] = vertex playing the role of Bourbaki node k+1
    std::vector<int> symmetrizer;  ///< d_i for i in vertices, d_i a_ij = d_j a_ji, min d = 1
    int positive_roots = 0;
};

struct Classification {
    bool finite = false;
    std::vector<DynkinComponent> components;
    std::optional<std::size_t> offending;  ///< index into components of the first non-finite one
    std::string reason;

    std::string type_label() const {
        std::string s;
        for (std::size_t k = 0; k < components.size(); ++k) s += (k ? " x " : "") + components[k].type.label();
        return s;
    }
};

/// Bourbaki-numbered Cartan matrix of a finite type (a_ij = <alpha_i^vee, alpha_j>).
inline IntMatrix cartan_matrix(const DynkinType& t) {
    const int n = t.rank;
    const bool ok = n >= 1 && ((t.family == 'A') || ((t.family == 'B' || t.family == 'C') && n >= 2) ||
                               (t.family == 'D' && n >= 4) || (t.family == 'E' && n >= 6 && n <= 8) ||
                               (t.family == 'F' && n == 4) || (t.family == 'G' && n == 2));
    detail::require(ok, ErrorKind::Malformed, "no finite Dynkin type " + t.label());
    IntMatrix a(static_cast<std::size_t>(n), 0);
    auto bond = [&](int i, int j, int aij, int aji) {
        a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = aij;
        a(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = aji;
    };
    for (int i = 0; i < n; ++i) a(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = 2;
    switch (t.family) {
        case 'A':
        case 'B':
        case 'C':
            for (int i = 0; i + 1 < n; ++i) bond(i, i + 1, -1, -1);
            if (t.family == 'B') bond(n - 2, n - 1, -1, -2);
            if (t.family == 'C') bond(n - 2, n - 1, -2, -1);
            break;
        case 'D':
            for (int i = 0; i + 2 < n; ++i) bond(i, i + 1, -1, -1);
            bond(n - 3, n - 1, -1, -1);
            break;
        case 'E':
            bond(0, 2, -1, -1);
            bond(1, 3, -1, -1);
            for (int i = 2; i + 1 < n; ++i) bond(i, i + 1, -1, -1);
            break;
        case 'F':
            bond(0, 1, -1, -1);
            bond(1, 2, -1, -2);
            bond(2, 3, -1, -1);
            break;
        case 'G':
            bond(0, 1, -3, -1);
            break;
    }
    return a;
}

/// Block-diagonal sum of Cartan matrices.
inline IntMatrix direct_sum(const std::vector<IntMatrix>& blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.size();
    IntMatrix a(n, 0);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) a(off + i, off + j) = b(i, j);
        off += b.size();
    }
    return a;
}

/// Throws Malformed unless a_ii = 2, a_ij <= 0 (i != j) and a_ij = 0 iff a_ji = 0.
inline void validate_generalized_cartan(const IntMatrix& a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        detail::require(a(i, i) == 2, ErrorKind::Malformed, "Cartan matrix needs a_ii = 2 (vertex " + std::to_string(i + 1) + ")");
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (i == j) continue;
            detail::require(a(i, j) <= 0, ErrorKind::Malformed,
                            "Cartan matrix needs a_ij <= 0 off the diagonal (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
            detail::require((a(i, j) == 0) == (a(j, i) == 0), ErrorKind::Malformed,
                            "Cartan matrix needs a_ij = 0 iff a_ji = 0 (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
    }
}

/// Connected components of the Dynkin graph (edge iff a_ij != 0), ordered by smallest vertex.
inline std::vector<std::vector<int>> dynkin_components(const IntMatrix& a) {
    const int n = static_cast<int>(a.size());
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> block{s}, stack{s};
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w)
                if (w != v && a(v, w) != 0 && comp[w] < 0) {
                    comp[w] = comp[s];
                    block.push_back(w);
                    stack.push_back(w);
                }
        }
        std::sort(block.begin(), block.end());
        out.push_back(std::move(block));
    }
    return out;
}

namespace detail {

/// Positive integer symmetrizer on a connected vertex set, normalized to min 1, or nullopt.
inline std::optional<std::vector<int>> symmetrize_component(const IntMatrix& a, const std::vector<int>& vs) {
    std::map<int, Rational> d;
    d[vs.front()] = 1;
    std::vector<int> stack{vs.front()};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : vs) {
            if (w == v || a(v, w) == 0) continue;
            Rational dw = d[v] * a(v, w) / a(w, v);
            auto it = d.find(w);
            if (it == d.end()) {
                d[w] = dw;
                stack.push_back(w);
            } else if (it->second != dw) {
                return std::nullopt;
            }
        }
    }
    mpz_class den = 1;
    for (auto& [v, x] : d) den = lcm(den, x.get_den());
    std::vector<mpz_class> ints;
    mpz_class g = 0;
    for (int v : vs) {
        mpz_class x = d[v].get_num() * (den / d[v].get_den());
        g = gcd(g, x);
        ints.push_back(x);
    }
    std::vector<int> out;
    for (auto& x : ints) out.push_back(static_cast<int>(mpz_class(x / g).get_si()));
    return out;
}

/// Sylvester criterion on the symmetrized matrix.
inline bool positive_definite(const IntMatrix& a, const std::vector<int>& vs, const std::vector<int>& d) {
    const std::size_t n = vs.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(d[i]) * a(vs[i], vs[j]);
    // LDL^T without pivoting: all pivots positive iff all leading minors positive
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k] <= 0) return false;
        for (std::size_t i = k + 1; i < n; ++i) {
            const Rational f = m[i][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return true;
}

inline std::vector<int> neighbours(const IntMatrix& a, const std::vector<int>& vs, int v) {
    std::vector<int> out;
    for (int w : vs)
        if (w != v && a(v, w) != 0) out.push_back(w);
    return out;
}

/// Walk a path starting at `start` away from `prev`, visiting until a leaf or a vertex in `stop`.
inline std::vector<int> walk(const IntMatrix& a, const std::vector<int>& vs, int start, int prev) {
    std::vector<int> path{start};
    int cur = start;
    while (true) {
        int next = -1;
        for (int w : neighbours(a, vs, cur))
            if (w != prev) next = w;
        if (next < 0 || neighbours(a, vs, cur).size() > 2) break;
        prev = cur;
        cur = next;
        path.push_back(cur);
    }
    return path;
}

inline DynkinComponent identify(const IntMatrix& a, const std::vector<int>& vs, const std::vector<int>& d) {
    DynkinComponent c;
    c.vertices = vs;
    c.symmetrizer = d;
    const int n = static_cast<int>(vs.size());
    auto dof = [&](int v) { return d[static_cast<std::size_t>(std::find(vs.begin(), vs.end(), v) - vs.begin())]; };
    int max_bond = 0;
    std::pair<int, int> multi{-1, -1};
    for (int v : vs)
        for (int w : vs)
            if (v < w && a(v, w) * a(w, v) > 1) {
                max_bond = std::max(max_bond, a(v, w) * a(w, v));
                multi = {v, w};
            }
    std::vector<int> leaves, branch;
    for (int v : vs) {
        auto deg = neighbours(a, vs, v).size();
        if (deg <= 1) leaves.push_back(v);
        if (deg >= 3) branch.push_back(v);
    }
    if (n == 1) {
        c.type = {'A', 1};
        c.labeling = vs;
    } else if (max_bond == 3) {
        c.type = {'G', 2};
        int s = dof(multi.first) < dof(multi.second) ? multi.first : multi.second;
        c.labeling = {s, s == multi.first ? multi.second : multi.first};
    } else if (max_bond == 2) {
        // path; locate the double bond
        auto [u, w] = multi;
        bool u_leaf = neighbours(a, vs, u).size() == 1, w_leaf = neighbours(a, vs, w).size() == 1;
        if (n == 2) {
            c.type = {'B', 2};
            int lng = dof(u) > dof(w) ? u : w;
            c.labeling = {lng, lng == u ? w : u};
        } else if (!u_leaf && !w_leaf) {
            c.type = {'F', 4};
            int lng = dof(u) > dof(w) ? u : w;  // alpha_2
            int shrt = lng == u ? w : u;        // alpha_3
            auto left = walk(a, vs, lng, shrt);
            std::reverse(left.begin(), left.end());
            auto right = walk(a, vs, shrt, lng);
            c.labeling = left;
            c.labeling.insert(c.labeling.end(), right.begin(), right.end());
        } else {
            int leaf = u_leaf ? u : w;
            int other = leaf == u ? w : u;
            c.type = {dof(leaf) < dof(other) ? 'B' : 'C', n};
            auto path = walk(a, vs, leaf, -1);
            std::reverse(path.begin(), path.end());
            c.labeling = path;
        }
    } else if (branch.empty()) {
        c.type = {'A', n};
        c.labeling = walk(a, vs, std::min(leaves.front(), leaves.back()), -1);
    } else {
        const int b = branch.front();
        std::vector<std::vector<int>> arms;
        for (int w : neighbours(a, vs, b)) arms.push_back(walk(a, vs, w, b));
        std::sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) {
            if (x.size() != y.size()) return x.size() < y.size();
            return x.back() < y.back();
        });
        const auto l0 = arms[0].size(), l1 = arms[1].size(), l2 = arms[2].size();
        if (l0 == 1 && l1 == 1) {
            c.type = {'D', n};
            auto longest = arms[2];
            if (n == 4) {
                // all arms are single leaves: smallest index plays alpha_1
                std::vector<int> lv{arms[0][0], arms[1][0], arms[2][0]};
                std::sort(lv.begin(), lv.end());
                c.labeling = {lv[0], b, lv[1], lv[2]};
            } else {
                std::reverse(longest.begin(), longest.end());
                c.labeling = longest;
                c.labeling.push_back(b);
                std::vector<int> tips{arms[0][0], arms[1][0]};
                std::sort(tips.begin(), tips.end());
                c.labeling.insert(c.labeling.end(), tips.begin(), tips.end());
            }
        } else {
            c.type = {'E', n};
            (void)l2;
            (void)l1;
            // arms: [1], [2 (smaller tip)], [the rest]
            const auto& two = arms[1];
            c.labeling = {two[1], arms[0][0], two[0], b};
            for (int v : arms[2]) c.labeling.push_back(v);
        }
    }
    c.positive_roots = c.type.positive_root_count();
    return c;
}

}  // namespace detail

/// Per-component Dynkin type, or NotFiniteType with the offending component.
inline Classification classify(const IntMatrix& a) {
    validate_generalized_cartan(a);
    Classification out;
    out.finite = true;
    for (const auto& vs : dynkin_components(a)) {
        auto d = detail::symmetrize_component(a, vs);
        if (!d || !detail::positive_definite(a, vs, *d)) {
            out.finite = false;
            out.offending = out.components.size();
            out.reason = d ? "symmetrized matrix is not positive definite" : "component is not symmetrizable";
            DynkinComponent bad;
            bad.vertices = vs;
            if (d) bad.symmetrizer = *d;
            out.components.push_back(std::move(bad));
            return out;
        }
        out.components.push_back(detail::identify(a, vs, *d));
    }
    return out;
}

inline bool is_finite_type(const IntMatrix& a) { return classify(a).finite; }

/// s_i(beta)
inline Root reflect(const IntMatrix& a, int i, Root beta) {
    int pairing = 0;
    for (std::size_t j = 0; j < beta.size(); ++j) pairing += beta[j] * a(static_cast<std::size_t>(i), j);
    beta[static_cast<std::size_t>(i)] -= pairing;
    return beta;
}

inline Root simple_root(std::size_t theta, int i) {
    Root r(theta, 0);
    r[static_cast<std::size_t>(i)] = 1;
    return r;
}

inline bool is_positive(const Root& r) {
    bool any = false;
    for (int x : r) {
        if (x < 0) return false;
        any = any || x > 0;
    }
    return any;
}

/**
 * Positive roots by closure from the simple roots: beta + alpha_i is a root iff
 * p - <beta, alpha_i^vee> > 0, where p is the length of the alpha_i-string below beta.
 * Ordered by height, then lexicographically.
 */
inline std::vector<Root> positive_roots(const IntMatrix& a) {
    detail::require(is_finite_type(a), ErrorKind::Malformed, "positive roots requested for a Cartan matrix of non-finite type");
    const std::size_t n = a.size();
    std::set<Root> found;
    std::vector<Root> level;
    for (std::size_t i = 0; i < n; ++i) level.push_back(simple_root(n, static_cast<int>(i)));
    found.insert(level.begin(), level.end());
    std::vector<Root> out = level;
    while (!level.empty()) {
        std::set<Root> next;
        for (const auto& beta : level) {
            for (std::size_t i = 0; i < n; ++i) {
                Root probe = beta;
                int p = 0;
                while (true) {
                    probe[i] -= 1;
                    if (found.count(probe) == 0) break;
                    ++p;
                }
                int pairing = 0;
                for (std::size_t j = 0; j < n; ++j) pairing += beta[j] * a(i, j);
                if (p - pairing > 0) {
                    Root up = beta;
                    up[i] += 1;
                    if (!found.count(up)) next.insert(up);
                }
            }
        }
        level.assign(next.begin(), next.end());
        found.insert(level.begin(), level.end());
        out.insert(out.end(), level.begin(), level.end());
        detail::require(out.size() <= 4096, ErrorKind::Internal, "root closure did not terminate");
    }
    std::stable_sort(out.begin(), out.end(), [](const Root& x, const Root& y) {
        if (height(x) != height(y)) return height(x) < height(y);
        return x > y;
    });
    return out;
}

/**
 * Reduced word of w_0: per component, repeatedly append the smallest vertex i with
 * w(alpha_i) > 0; components concatenated in order of their smallest vertex.
 */
inline std::vector<int> longest_word(const IntMatrix& a) {
    const auto cls = classify(a);
    detail::require(cls.finite, ErrorKind::Malformed, "longest word requested for a Cartan matrix of non-finite type");
    const std::size_t n = a.size();
    std::vector<int> word;
    for (const auto& comp : cls.components) {
        std::vector<int> w;
        while (true) {
            int pick = -1;
            for (int i : comp.vertices) {
                Root r = simple_root(n, i);
                for (auto it = w.rbegin(); it != w.rend(); ++it) r = reflect(a, *it, r);
                if (is_positive(r)) {
                    pick = i;
                    break;
                }
            }
            if (pick < 0) break;
            w.push_back(pick);
        }
        word.insert(word.end(), w.begin(), w.end());
    }
    return word;
}

/// beta_j = s_{i_1} ... s_{i_{j-1}}(alpha_{i_j}).
inline std::vector<Root> convex_order(const IntMatrix& a, const std::vector<int>& word) {
    const std::size_t n = a.size();
    std::vector<Root> out;
    std::set<Root> seen;
    for (std::size_t j = 0; j < word.size(); ++j) {
        Root r = simple_root(n, word[j]);
        for (std::size_t k = j; k-- > 0;) r = reflect(a, word[k], r);
        detail::require(is_positive(r), ErrorKind::Internal, "convex order produced a non-positive root; word is not reduced");
        detail::require(seen.insert(r).second, ErrorKind::Internal, "convex order repeated a root; word is not reduced");
        out.push_back(std::move(r));
    }
    return out;
}

inline std::vector<Root> convex_order(const IntMatrix& a) { return convex_order(a, longest_word(a)); }

/// Everything downstream modules need about the root system of a finite Cartan matrix.
struct RootSystemData {
    IntMatrix cartan;
    Classification classification;
    std::vector<Root> positive_roots;
    std::vector<int> reduced_word;
    std::vector<Root> convex_order;

    std::size_t size() const noexcept { return positive_roots.size(); }

    /// Position of beta in the convex order.
    std::size_t position(const Root& beta) const {
        auto it = std::find(convex_order.begin(), convex_order.end(), beta);
        detail::require(it != convex_order.end(), ErrorKind::Internal, "not a positive root: " + to_string(beta));
        return static_cast<std::size_t>(it - convex_order.begin());
    }

    bool is_root(const Root& beta) const { return std::find(positive_roots.begin(), positive_roots.end(), beta) != positive_roots.end(); }

    /// Index of the component containing the support of beta.
    std::size_t component_of(const Root& beta) const {
        for (std::size_t c = 0; c < classification.components.size(); ++c)
            for (int v : classification.components[c].vertices)
                if (beta[static_cast<std::size_t>(v)] != 0) return c;
        detail::fail(ErrorKind::Internal, "zero root");
    }

    /// |Phi_I^+| for component c.
    std::size_t component_size(std::size_t c) const {
        std::size_t k = 0;
        for (const auto& r : positive_roots) k += component_of(r) == c;
        return k;
    }
};

inline RootSystemData build_root_system(const IntMatrix& a) {
    RootSystemData rs;
    rs.cartan = a;
    rs.classification = classify(a);
    detail::require(rs.classification.finite, ErrorKind::Malformed,
                    "Cartan matrix is not of finite type: " + rs.classification.reason);
    rs.positive_roots = positive_roots(a);
    rs.reduced_word = longest_word(a);
    rs.convex_order = convex_order(a, rs.reduced_word);
    detail::require(rs.convex_order.size() == rs.positive_roots.size(), ErrorKind::Internal, "convex order length differs from |Phi+|");
    for (const auto& comp : rs.classification.components) {
        std::size_t idx = static_cast<std::size_t>(&comp - rs.classification.components.data());
        detail::require(rs.component_size(idx) == static_cast<std::size_t>(comp.positive_roots), ErrorKind::Internal,
                        "root count of " + comp.type.label() + " differs from the classical count");
    }
    return rs;
}

}  // namespace pointed
