#pragma once

/**
 * @file freealg.hpp
 * @brief The smash product k Gamma # T(V) in normal form h * word, braided commutators, root
 * vectors, the defining relations of the Nichols algebra and of its liftings, and dimensions of
 * degree-truncated quotients.
 */

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pointed/datum.hpp"
#include "pointed/error.hpp"
#include "pointed/exactfield.hpp"
#include "pointed/linking.hpp"
#include "pointed/nichols.hpp"
#include "pointed/parallel.hpp"

namespace pointed {

/// Basis element h * a_{i_1} ... a_{i_n} with the group part on the left.
struct Monomial {
    GroupElement group;
    Word word;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Sparse linear combination of normal-form monomials; zero coefficients are never stored.
class AlgElem {
public:
    AlgElem() = default;

    const std::map<Monomial, CycloNum>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add(const Monomial& m, const CycloNum& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (fresh) return;
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    /// Largest word length among the terms.
    std::size_t degree() const {
        std::size_t n = 0;
        for (const auto& [m, c] : terms_) n = std::max(n, m.word.size());
        return n;
    }

    friend AlgElem operator+(AlgElem a, const AlgElem& b) {
        for (const auto& [m, c] : b.terms_) a.add(m, c);
        return a;
    }
    friend AlgElem operator-(AlgElem a, const AlgElem& b) {
        for (const auto& [m, c] : b.terms_) a.add(m, CycloNum::zero(c.conductor()) - c);
        return a;
    }
    friend AlgElem operator*(const CycloNum& s, const AlgElem& a) {
        AlgElem r;
        for (const auto& [m, c] : a.terms_) r.add(m, s * c);
        return r;
    }
    friend bool operator==(const AlgElem& a, const AlgElem& b) { return (a - b).is_zero(); }

    /// Terms ordered by word length, then word, then group part: "(z^1) g(1,0) x1x2 + x2".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::vector<std::pair<Monomial, CycloNum>> ts(terms_.begin(), terms_.end());
        std::stable_sort(ts.begin(), ts.end(), [](const auto& x, const auto& y) {
            if (x.first.word.size() != y.first.word.size()) return x.first.word.size() < y.first.word.size();
            if (x.first.word != y.first.word) return x.first.word < y.first.word;
            return x.first.group < y.first.group;
        });
        std::string s;
        for (const auto& [m, c] : ts) {
            std::string mono;
            if (!m.group.is_identity()) mono = "g" + m.group.to_string();
            if (!m.word.empty()) mono += (mono.empty() ? "" : " ") + word_to_string(m.word);
            const std::string cs = c.to_string();
            std::string term;
            if (mono.empty())
                term = cs;
            else if (cs == "1")
                term = mono;
            else if (cs == "-1")
                term = "-" + mono;
            else
                term = "(" + cs + ") " + mono;
            s += (s.empty() ? "" : " + ") + term;
        }
        return s;
    }

private:
    std::map<Monomial, CycloNum> terms_;
};

/// Yetter-Drinfeld bidegree (g, chi) of a homogeneous element.
struct YDBidegree {
    GroupElement grp;
    Character chr;
    friend bool operator==(const YDBidegree&, const YDBidegree&) = default;
};

/**
 * Multiplication in k Gamma # T(V) for a datum: y a_j = chi_j(y) a_j y, so
 * (h u)(h' v) = chi_u(h')^{-1} (h h')(u v). Scalars live in Q(zeta_L) with L the lcm of the
 * datum conductor and the group exponent.
 */
class SmashAlgebra {
public:
    explicit SmashAlgebra(const Datum& d) : d_(d), L_(std::lcm(d.conductor(), d.group.exponent())) {}

    const Datum& datum() const noexcept { return d_; }
    int64_t conductor() const noexcept { return L_; }

    AlgElem scalar(const CycloNum& c) const {
        AlgElem r;
        r.add({d_.group.identity(), {}}, c);
        return r;
    }
    AlgElem one() const { return scalar(CycloNum::one(L_)); }
    AlgElem group_element(const GroupElement& h) const {
        AlgElem r;
        r.add({h, {}}, CycloNum::one(L_));
        return r;
    }
    /// a_i, 0-based
    AlgElem letter(int i) const {
        detail::require(i >= 0 && static_cast<std::size_t>(i) < d_.theta(), ErrorKind::Malformed, "letter out of range");
        AlgElem r;
        r.add({d_.group.identity(), {i}}, CycloNum::one(L_));
        return r;
    }
    AlgElem word(const Word& w) const {
        AlgElem r;
        r.add({d_.group.identity(), w}, CycloNum::one(L_));
        return r;
    }

    /// chi of a word: prod chi_{i_k}
    Character character_of(const Word& w) const {
        Character c = d_.group.trivial_character();
        for (int i : w) c *= d_.chi[static_cast<std::size_t>(i)];
        return c;
    }
    GroupElement group_of(const Word& w) const {
        GroupElement g = d_.group.identity();
        for (int i : w) g *= d_.g[static_cast<std::size_t>(i)];
        return g;
    }

    AlgElem mul(const AlgElem& a, const AlgElem& b) const {
        AlgElem r;
        for (const auto& [ma, ca] : a.terms()) {
            const Character cu = character_of(ma.word);
            for (const auto& [mb, cb] : b.terms()) {
                Word w = ma.word;
                w.insert(w.end(), mb.word.begin(), mb.word.end());
                const CycloNum s = ca * cb * embed_root(pair(cu, mb.group).inverse(), L_);
                r.add({ma.group * mb.group, std::move(w)}, s);
            }
        }
        return r;
    }

    AlgElem power(const AlgElem& a, int64_t n) const {
        AlgElem r = one();
        for (int64_t k = 0; k < n; ++k) r = mul(r, a);
        return r;
    }

    /// Bidegree (h g_w, chi_w) shared by all terms, or nullopt.
    std::optional<YDBidegree> bidegree(const AlgElem& a) const {
        std::optional<YDBidegree> out;
        for (const auto& [m, c] : a.terms()) {
            YDBidegree b{m.group * group_of(m.word), character_of(m.word)};
            if (out && !(*out == b)) return std::nullopt;
            out = b;
        }
        return out;
    }

    /// [u, v]_c = u v - <chi_v, g_u> v u
    AlgElem braided_commutator(const AlgElem& u, const AlgElem& v) const {
        if (u.is_zero() || v.is_zero()) return AlgElem{};
        const auto bu = bidegree(u), bv = bidegree(v);
        detail::require(bu && bv, ErrorKind::Malformed, "braided commutator of an element that is not bihomogeneous");
        return mul(u, v) - embed_root(pair(bv->chr, bu->grp), L_) * mul(v, u);
    }

    /// (ad_c a_i)^m (v)
    AlgElem ad_c_power(int i, int m, AlgElem v) const {
        detail::require(m >= 0, ErrorKind::Malformed, "negative ad_c exponent");
        const AlgElem a = letter(i);
        for (int k = 0; k < m; ++k) v = braided_commutator(a, v);
        return v;
    }

    /**
     * Root vectors in convex order. For a non-simple root beta pick the largest vertex i with
     * beta - alpha_i a positive root preceding beta in the convex order (or, when none precedes
     * it, the largest i with beta - alpha_i a root); then x_beta is [x_{beta-alpha_i}, a_i]_c if
     * beta - alpha_i precedes alpha_i and [a_i, x_{beta-alpha_i}]_c otherwise.
     */
    std::vector<AlgElem> root_vectors() const {
        const auto& rs = d_.roots;
        std::map<Root, AlgElem> memo;
        std::vector<Root> by_height = rs.positive_roots;
        std::stable_sort(by_height.begin(), by_height.end(), [](const Root& x, const Root& y) { return height(x) < height(y); });
        for (const auto& beta : by_height) {
            if (height(beta) == 1) {
                const auto i = static_cast<int>(std::find(beta.begin(), beta.end(), 1) - beta.begin());
                memo.emplace(beta, letter(i));
                continue;
            }
            const auto [i, rest] = split_root(beta);
            const AlgElem& xr = memo.at(rest);
            const AlgElem xi = letter(i);
            const Root ai = simple_root(beta.size(), i);
            memo.emplace(beta, rs.position(rest) < rs.position(ai) ? braided_commutator(xr, xi) : braided_commutator(xi, xr));
        }
        std::vector<AlgElem> out;
        for (const auto& beta : rs.convex_order) out.push_back(memo.at(beta));
        return out;
    }

    /// The vertex i and root beta - alpha_i used to bracket beta.
    std::pair<int, Root> split_root(const Root& beta) const {
        const auto& rs = d_.roots;
        std::optional<int> preceding, any;
        for (int i = static_cast<int>(beta.size()) - 1; i >= 0; --i) {
            Root rest = beta;
            if (--rest[static_cast<std::size_t>(i)] < 0 || !rs.is_root(rest)) continue;
            if (!any) any = i;
            if (!preceding && rs.position(rest) < rs.position(beta)) preceding = i;
        }
        detail::require(any.has_value(), ErrorKind::Internal, "no decomposition of root " + to_string(beta));
        const int i = preceding.value_or(*any);
        Root rest = beta;
        --rest[static_cast<std::size_t>(i)];
        return {i, rest};
    }

    /// The image in T(V); requires every group part to be trivial.
    TensorElem to_tensor(const AlgElem& a) const {
        TensorElem t(L_);
        for (const auto& [m, c] : a.terms()) {
            detail::require(m.group.is_identity(), ErrorKind::Malformed, "element has a nontrivial group part");
            t.add(m.word, c);
        }
        return t;
    }

private:
    Datum d_;
    int64_t L_;
};

enum class RelationKind { GroupOrder, Smash, Serre, Linking, RootPower };

inline const char* to_string(RelationKind k) {
    switch (k) {
        case RelationKind::GroupOrder: return "group";
        case RelationKind::Smash: return "smash";
        case RelationKind::Serre: return "serre";
        case RelationKind::Linking: return "linking";
        case RelationKind::RootPower: return "root_power";
    }
    return "?";
}

/**
 * A defining relation. Group-order and smash relations hold identically in the normal form, so
 * they carry a zero element and only their text.
 */
struct Relation {
    RelationKind kind;
    std::string label;
    AlgElem element;
    bool builtin = false;

    std::string to_string() const { return builtin ? label : label + ": " + element.to_string(); }
};

using RelationSet = std::vector<Relation>;

/// y_h^{M_h} = 1
inline RelationSet group_relations(const Datum& d) {
    RelationSet out;
    for (std::size_t h = 0; h < d.group.rank(); ++h)
        out.push_back({RelationKind::GroupOrder, "y" + std::to_string(h + 1) + "^" + std::to_string(d.group.orders()[h]) + " = 1", {}, true});
    return out;
}

/// y_h a_j = chi_j(y_h) a_j y_h
inline RelationSet smash_relations(const Datum& d) {
    RelationSet out;
    const int64_t L = std::lcm(d.conductor(), d.group.exponent());
    for (std::size_t h = 0; h < d.group.rank(); ++h)
        for (std::size_t j = 0; j < d.theta(); ++j)
            out.push_back({RelationKind::Smash,
                           "y" + std::to_string(h + 1) + " a" + std::to_string(j + 1) + " = " + pair(d.chi[j], d.group.generator(h)).to_string(L) + " a" +
                               std::to_string(j + 1) + " y" + std::to_string(h + 1),
                           {},
                           true});
    return out;
}

enum class SerreScope { All, Joined };

/// (ad_c a_i)^{1 - a_ij}(a_j) for i != j; all pairs, or only i ~ j.
inline RelationSet serre_relations(const SmashAlgebra& A, SerreScope scope) {
    const Datum& d = A.datum();
    RelationSet out;
    const auto n = static_cast<int>(d.theta());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || (scope == SerreScope::Joined && !d.components.joined(i, j))) continue;
            const int m = 1 - d.cartan(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            out.push_back({RelationKind::Serre, "(ad a" + std::to_string(i + 1) + ")^" + std::to_string(m) + " a" + std::to_string(j + 1),
                           A.ad_c_power(i, m, A.letter(j)), false});
        }
    return out;
}

/// a_i a_j - chi_j(g_i) a_j a_i - lambda_ij (1 - g_i g_j) for i < j, i and j in different components.
inline RelationSet linking_relations(const SmashAlgebra& A, const LinkingDatum& ld) {
    const Datum& d = A.datum();
    validate_linking(d, ld);
    RelationSet out;
    const auto n = static_cast<int>(d.theta());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (d.components.joined(i, j)) continue;
            const CycloNum lambda = ld.value(i, j, A.conductor());
            AlgElem r = A.braided_commutator(A.letter(i), A.letter(j));
            r = r - lambda * (A.one() - A.group_element(d.g[static_cast<std::size_t>(i)] * d.g[static_cast<std::size_t>(j)]));
            const std::string ai = "a" + std::to_string(i + 1), aj = "a" + std::to_string(j + 1);
            const std::string label = ai + " " + aj + " - " + d.braiding(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).to_string(A.conductor()) + " " + aj +
                                      " " + ai + " = (" + lambda.to_string() + ")(1 - g" + std::to_string(i + 1) + " g" + std::to_string(j + 1) + ")";
            out.push_back({RelationKind::Linking, label, std::move(r), false});
        }
    return out;
}

/// x_beta^{N_I} for every positive root, in convex order.
inline RelationSet root_power_relations(const SmashAlgebra& A) {
    const Datum& d = A.datum();
    RelationSet out;
    const auto xs = A.root_vectors();
    for (std::size_t k = 0; k < xs.size(); ++k) {
        const Root& beta = d.roots.convex_order[k];
        const int64_t N = d.components.N[d.roots.component_of(beta)];
        out.push_back({RelationKind::RootPower, "x" + to_string(beta) + "^" + std::to_string(N), A.power(xs[k], N), false});
    }
    return out;
}

/// Relations of B(V) # k Gamma: Serre relations for all i != j and root vector powers.
inline RelationSet nichols_relations(const SmashAlgebra& A) {
    RelationSet out = group_relations(A.datum());
    const auto append = [&](RelationSet part) { out.insert(out.end(), part.begin(), part.end()); };
    append(smash_relations(A.datum()));
    append(serre_relations(A, SerreScope::All));
    append(root_power_relations(A));
    return out;
}

/// Relations of the lifted algebra: Serre relations for i ~ j, linking relations, root vector powers.
inline RelationSet lifted_relations(const SmashAlgebra& A, const LinkingDatum& ld) {
    RelationSet out = group_relations(A.datum());
    const auto append = [&](RelationSet part) { out.insert(out.end(), part.begin(), part.end()); };
    append(smash_relations(A.datum()));
    append(serre_relations(A, SerreScope::Joined));
    append(linking_relations(A, ld));
    append(root_power_relations(A));
    return out;
}

namespace detail {

struct RelationTerm {
    GroupElement group;
    Word word;
    CycloNum coeff;
};

struct PreparedRelation {
    std::vector<RelationTerm> terms;
    std::size_t degree = 0;
};

inline std::vector<PreparedRelation> prepare(const SmashAlgebra& A, const RelationSet& rels) {
    std::vector<PreparedRelation> out;
    for (const auto& r : rels) {
        if (r.builtin || r.element.is_zero()) continue;
        PreparedRelation p;
        std::optional<Character> chr;
        for (const auto& [m, c] : r.element.terms()) {
            const Character cm = A.character_of(m.word);
            detail::require(!chr || *chr == cm, ErrorKind::Unsupported,
                            "relation " + r.label + " is not homogeneous for the character grading");
            chr = cm;
            p.terms.push_back({m.group, m.word, c});
            p.degree = std::max(p.degree, m.word.size());
        }
        out.push_back(std::move(p));
    }
    return out;
}

/// Words of length n in base theta, in lexicographic order.
inline Word word_from_index(std::size_t theta, std::size_t n, uint64_t idx) {
    Word w(n, 0);
    for (std::size_t k = n; k-- > 0;) {
        w[k] = static_cast<int>(idx % theta);
        idx /= theta;
    }
    return w;
}

}  // namespace detail

/**
 * Per a-degree n <= D, the number of monomials h * w with |w| = n that are not leading terms of
 * the span of { h u r v : r a relation, |u| + deg r + |v| <= D }. Leading terms are taken in the
 * degree-lexicographic order with a_1 < ... < a_theta. The span is invariant under left
 * multiplication by Gamma, so it splits along the characters psi of Gamma; relations homogeneous
 * for the character grading need no right group factors.
 */
inline std::vector<int64_t> quotient_dims_at(const SmashAlgebra& A, const RelationSet& rels, std::size_t D, const ExecutionOptions& opt = {}) {
    const Datum& d = A.datum();
    const std::size_t theta = d.theta();
    const auto prepared = detail::prepare(A, rels);
    std::vector<uint64_t> offset(D + 2, 0), count(D + 1, 1);
    for (std::size_t n = 1; n <= D; ++n) count[n] = count[n - 1] * theta;
    for (std::size_t n = 0; n <= D; ++n) offset[n + 1] = offset[n] + count[n];
    {
        const __int128 size = static_cast<__int128>(d.group.order()) * count[D];
        if (size > opt.budget)
            throw BudgetExceeded("truncated quotient at degree " + std::to_string(D) + " needs |Gamma| theta^D = " +
                                 std::to_string(static_cast<int64_t>(std::min<__int128>(size, INT64_MAX))) + " > budget " +
                                 std::to_string(opt.budget));
        detail::require(offset[D + 1] < (uint64_t{1} << 31), ErrorKind::Budget, "monomial space too large");
    }
    auto column = [&](const Word& w) {
        uint64_t v = 0;
        for (int i : w) v = v * theta + static_cast<uint64_t>(i);
        return static_cast<uint32_t>(offset[w.size()] + v);
    };
    int64_t L = A.conductor();
    for (const auto& p : prepared)
        for (const auto& t : p.terms) L = std::lcm(L, t.coeff.conductor());
    const auto psis = d.group.enumerate_characters(opt.budget);
    std::vector<std::vector<int64_t>> per_psi(psis.size());
    parallel_for(psis.size(), opt.threads, [&](std::size_t k) {
        const Character& psi = psis[k];
        SparseEchelon ech;
        // rows ordered by total degree keep reductions short
        for (std::size_t total = 0; total <= D; ++total)
            for (const auto& p : prepared) {
                if (p.degree > total) continue;
                const std::size_t free = total - p.degree;
                // psi(k_t) per term, independent of the multipliers
                std::vector<CycloNum> base;
                for (const auto& t : p.terms) base.push_back(t.coeff.lift(L) * embed_root(pair(psi, t.group), L));
                for (std::size_t a = 0; a <= free; ++a) {
                    const std::size_t b = free - a;
                    for (uint64_t ui = 0; ui < count[a]; ++ui) {
                        const Word u = detail::word_from_index(theta, a, ui);
                        const Character cu = A.character_of(u);
                        std::vector<CycloNum> coeff;
                        for (std::size_t t = 0; t < p.terms.size(); ++t)
                            coeff.push_back(base[t] * embed_root(pair(cu, p.terms[t].group).inverse(), L));
                        for (uint64_t vi = 0; vi < count[b]; ++vi) {
                            const Word v = detail::word_from_index(theta, b, vi);
                            std::map<uint32_t, CycloNum> acc;
                            for (std::size_t t = 0; t < p.terms.size(); ++t) {
                                Word w = u;
                                w.insert(w.end(), p.terms[t].word.begin(), p.terms[t].word.end());
                                w.insert(w.end(), v.begin(), v.end());
                                const uint32_t col = column(w);
                                auto it = acc.find(col);
                                if (it == acc.end())
                                    acc.emplace(col, coeff[t]);
                                else
                                    it->second = it->second + coeff[t];
                            }
                            SparseRow row;
                            for (auto& [col, c] : acc)
                                if (!c.is_zero()) row.emplace_back(col, std::move(c));
                            ech.insert(std::move(row));
                        }
                    }
                }
            }
        std::vector<int64_t> dims(D + 1, 0);
        for (std::size_t n = 0; n <= D; ++n) dims[n] = static_cast<int64_t>(count[n]);
        for (uint32_t col : ech.pivot_columns()) {
            const auto n = static_cast<std::size_t>(std::upper_bound(offset.begin(), offset.end(), col) - offset.begin()) - 1;
            --dims[n];
        }
        per_psi[k] = std::move(dims);
    });
    std::vector<int64_t> dims(D + 1, 0);
    for (const auto& v : per_psi)
        for (std::size_t n = 0; n <= D; ++n) dims[n] += v[n];
    return dims;
}

struct QuotientDims {
    std::size_t degree_cap = 0;
    std::vector<int64_t> dims;      ///< per a-degree at the cap
    std::vector<int64_t> previous;  ///< per a-degree at cap - 1
    int64_t total = 0;
    int64_t top_pbw_degree = 0;
    bool stabilized = false;  ///< agreement with cap - 1 below the cap and top PBW degree < cap
};

/**
 * Quotient dimensions at cap D together with the stabilization test against D - 1. The
 * truncated span can only miss ideal elements, so each total is an upper bound for the
 * dimension of the algebra.
 */
inline QuotientDims truncated_quotient_dim(const SmashAlgebra& A, const RelationSet& rels, std::size_t D, const ExecutionOptions& opt = {}) {
    detail::require(D >= 1, ErrorKind::Malformed, "degree cap must be at least 1");
    QuotientDims q;
    q.degree_cap = D;
    q.dims = quotient_dims_at(A, rels, D, opt);
    q.previous = quotient_dims_at(A, rels, D - 1, opt);
    for (auto x : q.dims) q.total += x;
    q.top_pbw_degree = top_pbw_degree(A.datum().roots, A.datum().components.N);
    q.stabilized = std::equal(q.previous.begin(), q.previous.end(), q.dims.begin()) && q.top_pbw_degree < static_cast<int64_t>(D);
    return q;
}

}  // namespace pointed
