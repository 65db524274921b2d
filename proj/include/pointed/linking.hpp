#pragma once

/**
 * @file linking.hpp
 * @brief Linkable vertex pairs, linking data, enumeration of data over (Z/p)^s and mechanical
 * checks of the hypotheses under which the lifting results apply.
 */

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pointed/datum.hpp"
#include "pointed/error.hpp"
#include "pointed/parallel.hpp"

namespace pointed {

struct LinkCertificate {
    bool not_joined = false;            ///< i and j lie in different components
    bool g_product_nontrivial = false;  ///< g_i g_j != 1
    bool chi_product_trivial = false;   ///< chi_i chi_j = epsilon
    bool linkable() const { return not_joined && g_product_nontrivial && chi_product_trivial; }

    /// Failed conditions, comma separated; empty when linkable.
    std::string failures() const {
        std::string s;
        auto add = [&](bool ok, const char* what) {
            if (!ok) s += (s.empty() ? "" : ", ") + std::string(what);
        };
        add(not_joined, "i and j in the same component");
        add(g_product_nontrivial, "g_i g_j = 1");
        add(chi_product_trivial, "chi_i chi_j != epsilon");
        return s;
    }
};

/// Linkability of vertices i != j (0-based); asserts q_j = q_i^{-1} for linkable pairs.
inline LinkCertificate linkable(const Datum& d, int i, int j) {
    detail::require(i != j, ErrorKind::Malformed, "linkability needs two distinct vertices");
    const auto n = static_cast<int>(d.theta());
    detail::require(i >= 0 && j >= 0 && i < n && j < n, ErrorKind::Malformed, "vertex out of range");
    LinkCertificate c;
    c.not_joined = !d.components.joined(i, j);
    c.g_product_nontrivial = !(d.g[static_cast<std::size_t>(i)] * d.g[static_cast<std::size_t>(j)]).is_identity();
    c.chi_product_trivial = (d.chi[static_cast<std::size_t>(i)] * d.chi[static_cast<std::size_t>(j)]).is_identity();
    if (c.linkable())
        detail::require(d.q(static_cast<std::size_t>(j)) == d.q(static_cast<std::size_t>(i)).inverse(), ErrorKind::Internal,
                        "linkable vertices " + detail::vertex_pair(i, j) + " violate q_j = q_i^{-1}");
    return c;
}

/// All linkable pairs (i < j), lexicographic.
inline std::vector<std::pair<int, int>> linkable_pairs(const Datum& d) {
    std::vector<std::pair<int, int>> out;
    const auto n = static_cast<int>(d.theta());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (linkable(d, i, j).linkable()) out.emplace_back(i, j);
    return out;
}

/// Sparse (lambda_ij), i < j. A missing value stands for an arbitrary nonzero parameter.
struct LinkingDatum {
    std::map<std::pair<int, int>, std::optional<CycloNum>> lambda;

    /// lambda_ij for i < j; zero when absent.
    CycloNum value(int i, int j, int64_t L) const {
        if (i > j) std::swap(i, j);
        auto it = lambda.find({i, j});
        if (it == lambda.end()) return CycloNum::zero(L);
        detail::require(it->second.has_value(), ErrorKind::Malformed, "linking parameter is symbolic");
        return it->second->lift(std::lcm(L, it->second->conductor()));
    }

    bool is_nonzero(int i, int j) const {
        if (i > j) std::swap(i, j);
        auto it = lambda.find({i, j});
        return it != lambda.end() && (!it->second || !it->second->is_zero());
    }

    /// Pairs carrying a nonzero (or symbolic) parameter.
    std::vector<std::pair<int, int>> support() const {
        std::vector<std::pair<int, int>> out;
        for (const auto& [ij, v] : lambda)
            if (!v || !v->is_zero()) out.push_back(ij);
        return out;
    }
};

/**
 * Throws InvalidLinking when some lambda_ij != 0 sits on a pair that is not linkable or when a
 * vertex carries two nonzero parameters.
 */
inline void validate_linking(const Datum& d, const LinkingDatum& ld) {
    std::map<int, int> partner;
    for (const auto& [i, j] : ld.support()) {
        const auto n = static_cast<int>(d.theta());
        detail::require(i >= 0 && j < n && i < j, ErrorKind::InvalidLinking,
                        "linking parameter on " + detail::vertex_pair(i, j) + " needs 1 <= i < j <= theta");
        const auto cert = linkable(d, i, j);
        detail::require(cert.linkable(), ErrorKind::InvalidLinking,
                        "lambda_" + std::to_string(i + 1) + std::to_string(j + 1) + " != 0 but vertices " + detail::vertex_pair(i, j) +
                            " are not linkable (need i, j in different components, g_i g_j != 1 and chi_i chi_j = epsilon; failed: " +
                            cert.failures() + ")");
        for (int v : {i, j}) {
            auto [it, fresh] = partner.emplace(v, v == i ? j : i);
            detail::require(fresh, ErrorKind::InvalidLinking,
                            "vertex " + std::to_string(v + 1) + " is linked to both " + std::to_string(it->second + 1) + " and " +
                                std::to_string((v == i ? j : i) + 1) + "; a vertex can be linked to at most one other vertex");
        }
    }
}

/**
 * Every linking datum supported on a matching of linkable pairs. With normalize, nonzero
 * parameters are 1; otherwise they are left symbolic. Subsets are listed in binary counting
 * order over the lexicographic pair list.
 */
inline std::vector<LinkingDatum> enumerate_linkings(const Datum& d, bool normalize = true) {
    const auto pairs = linkable_pairs(d);
    if (pairs.size() > 24) throw BudgetExceeded(std::to_string(pairs.size()) + " linkable pairs exceed the enumeration limit of 24");
    std::vector<LinkingDatum> out;
    const int64_t L = d.conductor();
    for (uint64_t mask = 0; mask < (uint64_t{1} << pairs.size()); ++mask) {
        std::set<int> used;
        bool matching = true;
        LinkingDatum ld;
        for (std::size_t k = 0; k < pairs.size() && matching; ++k) {
            if (!(mask >> k & 1)) continue;
            const auto [i, j] = pairs[k];
            matching = used.insert(i).second && used.insert(j).second;
            ld.lambda[pairs[k]] = normalize ? std::optional<CycloNum>(CycloNum::one(L)) : std::nullopt;
        }
        if (matching) out.push_back(std::move(ld));
    }
    return out;
}

/// 2s(p-1)/(p-2): no datum over (Z/p)^s has more vertices.
inline double theta_bound(int64_t p, std::size_t s) { return 2.0 * static_cast<double>(s) * static_cast<double>(p - 1) / static_cast<double>(p - 2); }

struct EnumerationOptions {
    int64_t p = 3;
    std::size_t s = 1;
    std::size_t theta_max = 1;
    std::vector<std::string> types;  ///< whitelist of component labels such as "A_2"; empty admits all
    bool up_to_permutation = true;   ///< list each vertex multiset once
};

struct EnumerationResult {
    std::vector<Datum> data;
    std::vector<std::size_t> count_by_theta;  ///< index theta
    bool bound_capped = false;  ///< a theta level came out empty, so no larger theta can occur
    std::size_t theta_searched = 0;
    std::size_t max_theta = 0;  ///< largest theta with a datum (before type filtering)
};

namespace detail {

struct VertexType {
    GroupElement g;
    Character chi;
};

inline bool admitted(const Datum& d, const std::vector<std::string>& types) {
    if (types.empty()) return true;
    for (const auto& comp : d.roots.classification.components)
        if (std::find(types.begin(), types.end(), comp.type.label()) == types.end()) return false;
    return true;
}

}  // namespace detail

/**
 * All data over (Z/p)^s with theta <= theta_max in lexicographic order of vertex tuples,
 * theta by theta. A prefix that is not of finite Cartan type is pruned, since principal
 * submatrices of finite type matrices are of finite type; for the same reason the search stops
 * at the first theta level with no data. Emitting a datum beyond the vertex bound raises an
 * Internal error.
 */
inline EnumerationResult enumerate_data(const EnumerationOptions& eo, const ExecutionOptions& opt = {}) {
    detail::require(is_prime(eo.p) && eo.p % 2 == 1, ErrorKind::Malformed, "enumeration needs an odd prime p");
    const AbelianGroup group = AbelianGroup::elementary(eo.p, eo.s);
    std::vector<detail::VertexType> types;
    for (const auto& g : group.enumerate_elements(opt.budget))
        for (const auto& chi : group.enumerate_characters(opt.budget))
            if (!pair(chi, g).is_one()) types.push_back({g, chi});
    const std::size_t T = types.size();
    // pairwise Cartan compatibility and the entries it forces
    std::vector<char> compatible(T * T, 0);
    for (std::size_t x = 0; x < T; ++x)
        for (std::size_t y = 0; y < T; ++y) {
            const auto b = braiding_from_data({types[x].g, types[y].g}, {types[x].chi, types[y].chi});
            const auto r = detect_cartan(b);
            compatible[x * T + y] = r.is_cartan && is_finite_type(r.cartan);
        }
    const double bound = theta_bound(eo.p, eo.s);
    EnumerationResult res;
    res.count_by_theta.assign(eo.theta_max + 1, 0);
    for (std::size_t theta = 1; theta <= eo.theta_max; ++theta) {
        res.theta_searched = theta;
        std::vector<std::vector<Datum>> parts(T);
        std::vector<std::size_t> valid(T, 0);
        parallel_for(T, opt.threads, [&](std::size_t first) {
            std::vector<std::size_t> tuple{first};
            auto rec = [&](auto&& self) -> void {
                const std::size_t k = tuple.size();
                RawDatum raw{group, {}, {}, std::nullopt};
                for (auto t : tuple) {
                    raw.g.push_back(types[t].g);
                    raw.chi.push_back(types[t].chi);
                }
                // every sub-datum of a datum is a datum, so invalid prefixes are pruned
                std::optional<Datum> d;
                try {
                    d = validate_datum(raw);
                } catch (const Error& e) {
                    if (e.kind() == ErrorKind::InvalidDatum || e.kind() == ErrorKind::InconsistentDatum) return;
                    throw;
                }
                if (k == theta) {
                    ++valid[first];
                    if (detail::admitted(*d, eo.types)) parts[first].push_back(std::move(*d));
                    return;
                }
                for (std::size_t t = eo.up_to_permutation ? tuple.back() : 0; t < T; ++t) {
                    bool ok = true;
                    for (auto u : tuple) ok = ok && compatible[u * T + t];
                    if (!ok) continue;
                    tuple.push_back(t);
                    self(self);
                    tuple.pop_back();
                }
            };
            rec(rec);
        });
        std::size_t found = 0;
        for (auto& part : parts)
            for (auto& d : part) {
                detail::require(static_cast<double>(theta) <= bound + 1e-9, ErrorKind::Internal,
                                "datum with theta = " + std::to_string(theta) + " exceeds the vertex bound 2s(p-1)/(p-2)");
                res.data.push_back(std::move(d));
                ++found;
            }
        res.count_by_theta[theta] = found;
        // the type filter applies at emission only, so emptiness is judged before filtering
        std::size_t any_valid = 0;
        for (auto v : valid) any_valid += v;
        if (any_valid == 0) {
            res.bound_capped = true;
            break;
        }
        res.max_theta = theta;
    }
    return res;
}

struct HypothesisFlag {
    std::string name;
    bool ok = true;
    std::vector<std::string> reasons;  ///< violated conditions, each tagged with its verbatim condition
};

struct HypothesisReport {
    std::vector<HypothesisFlag> flags;

    const HypothesisFlag& flag(const std::string& name) const {
        for (const auto& f : flags)
            if (f.name == name) return f;
        detail::fail(ErrorKind::Internal, "no hypothesis flag " + name);
    }
};

/**
 * Evaluates, condition by condition:
 *  - thm_main_applicable: Gamma = (Z/p)^s with p > 17 prime (p must match p_context if given);
 *  - serre_lift_ok: per component, N_I != 3, and N_I != 5 for B_n, C_n, F_4, N_I != 7 for G_2;
 *  - degree1_ok: all ord b_ij odd, N_i not divisible by 3 and > 7, N_i not divisible by 5 on
 *    B_n, C_n, F_4 and by 5 or 7 on G_2, and q_i q_j = 1 or ord(q_i q_j) = N_i for i, j unjoined;
 *  - odd_orders_ok, G2_3_ok: the standing hypotheses recorded by validate_datum;
 *  - root_power_lift_ok: g_i^{N_i} = 1 for all i.
 */
inline HypothesisReport check_hypotheses(const Datum& d, std::optional<int64_t> p_context = std::nullopt) {
    HypothesisReport rep;
    const auto& comps = d.roots.classification.components;
    auto family = [&](std::size_t c) { return comps[c].type.family; };
    auto vname = [](int i) { return std::to_string(i + 1); };

    HypothesisFlag main{"thm_main_applicable", true, {}};
    const auto& orders = d.group.orders();
    const bool elementary = !orders.empty() && std::all_of(orders.begin(), orders.end(), [&](int64_t m) { return m == orders.front(); }) &&
                            is_prime(orders.front());
    if (!elementary) {
        main.ok = false;
        main.reasons.push_back("group is (Z/p)^s");
    } else {
        const int64_t p = orders.front();
        if (p_context && *p_context != p) {
            main.ok = false;
            main.reasons.push_back("group is (Z/p)^s with p = " + std::to_string(*p_context));
        }
        if (p <= 17) {
            main.ok = false;
            main.reasons.push_back("p > 17");
        }
    }
    rep.flags.push_back(main);

    HypothesisFlag serre{"serre_lift_ok", true, {}};
    for (std::size_t c = 0; c < comps.size(); ++c) {
        if (comps[c].vertices.size() < 2) continue;
        const int64_t N = d.components.N[c];
        const std::string where = " (component " + comps[c].type.label() + " at vertex " + vname(comps[c].vertices.front()) + ")";
        if (N == 3) serre.reasons.push_back("N_I ≠ 3" + where);
        if ((family(c) == 'B' || family(c) == 'C' || family(c) == 'F') && N == 5) serre.reasons.push_back("N_I ≠ 5" + where);
        if (family(c) == 'G' && N == 7) serre.reasons.push_back("N_I ≠ 7" + where);
    }
    serre.ok = serre.reasons.empty();
    rep.flags.push_back(serre);

    HypothesisFlag deg1{"degree1_ok", true, {}};
    const auto n = static_cast<int>(d.theta());
    if (!d.odd_orders) deg1.reasons.push_back("ord(b_ij) is odd");
    for (int i = 0; i < n; ++i) {
        const int64_t N = d.N_of_vertex(i);
        const auto c = d.components.component_of(i);
        if (N % 3 == 0) deg1.reasons.push_back("N_i is not divisible by 3 (vertex " + vname(i) + ")");
        if (N <= 7) deg1.reasons.push_back("N_i > 7 (vertex " + vname(i) + ")");
        if ((family(c) == 'B' || family(c) == 'C' || family(c) == 'F') && N % 5 == 0)
            deg1.reasons.push_back("N_i is not divisible by 5 (vertex " + vname(i) + ")");
        if (family(c) == 'G' && (N % 5 == 0 || N % 7 == 0)) deg1.reasons.push_back("N_i is not divisible by 5 or 7 (vertex " + vname(i) + ")");
        for (int j = 0; j < n; ++j) {
            if (j == i || d.components.joined(i, j)) continue;
            const auto qq = d.q(static_cast<std::size_t>(i)) * d.q(static_cast<std::size_t>(j));
            if (!qq.is_one() && qq.order() != N)
                deg1.reasons.push_back("q_i q_j = 1 or ord(q_i q_j) = N_i " + detail::vertex_pair(i, j));
        }
    }
    deg1.ok = deg1.reasons.empty();
    rep.flags.push_back(deg1);

    HypothesisFlag odd{"odd_orders_ok", d.odd_orders, {}};
    if (!d.odd_orders) {
        const auto [i, j] = *d.even_order_witness;
        odd.reasons.push_back("ord <chi_j, g_i> is odd " + detail::vertex_pair(i, j));
    }
    rep.flags.push_back(odd);

    HypothesisFlag g2{"G2_3_ok", d.g2_not_divisible_by_3, {}};
    if (!d.g2_not_divisible_by_3) g2.reasons.push_back("3 does not divide N_I on G_2 components (component " + std::to_string(*d.g2_witness + 1) + ")");
    rep.flags.push_back(g2);

    HypothesisFlag root{"root_power_lift_ok", true, {}};
    for (int i = 0; i < n; ++i)
        if (!d.g[static_cast<std::size_t>(i)].pow(d.N_of_vertex(i)).is_identity()) root.reasons.push_back("g_i^{N_i} = 1 (vertex " + vname(i) + ")");
    root.ok = root.reasons.empty();
    rep.flags.push_back(root);
    return rep;
}

}  // namespace pointed
