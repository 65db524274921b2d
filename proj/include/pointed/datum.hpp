#pragma once

/**
 * @file datum.hpp
 * @brief A datum (Gamma, (g_i), (chi_i)) with its braiding, Cartan matrix, Dynkin components
 * and root system, validated on construction.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pointed/abelian.hpp"
#include "pointed/braiding.hpp"
#include "pointed/error.hpp"
#include "pointed/rootsys.hpp"

namespace pointed {

/// Unvalidated input: group, vertices and an optional Cartan matrix to check against.
struct RawDatum {
    AbelianGroup group;
    std::vector<GroupElement> g;
    std::vector<Character> chi;
    std::optional<IntMatrix> cartan;
};

struct Datum {
    AbelianGroup group;
    std::vector<GroupElement> g;
    std::vector<Character> chi;
    BraidingMatrix braiding;
    IntMatrix cartan;
    ComponentStructure components;
    RootSystemData roots;

    /// All ord <chi_i, g_j> odd; the first even entry otherwise.
    bool odd_orders = true;
    std::optional<std::pair<int, int>> even_order_witness;
    /// 3 does not divide N_I on G_2 components; the first offending component otherwise.
    bool g2_not_divisible_by_3 = true;
    std::optional<std::size_t> g2_witness;

    std::size_t theta() const noexcept { return g.size(); }

    /// lcm of the orders of the g_i; every braiding entry lives in mu_L.
    int64_t conductor() const {
        int64_t L = 1;
        for (const auto& x : g) L = std::lcm(L, x.order());
        return L;
    }

    RootOfUnity q(std::size_t i) const { return braiding(i, i); }

    int64_t N_of_vertex(int i) const { return components.N[components.component_of(i)]; }

    /// prod_i g_i^{beta_i}
    GroupElement g_of(const Root& beta) const {
        GroupElement r = group.identity();
        for (std::size_t i = 0; i < beta.size(); ++i) r *= g[i].pow(beta[i]);
        return r;
    }

    /// prod_i chi_i^{beta_i}
    Character chi_of(const Root& beta) const {
        Character r = group.trivial_character();
        for (std::size_t i = 0; i < beta.size(); ++i) r *= chi[i].pow(beta[i]);
        return r;
    }

    /// |Gamma| prod_I N_I^{|Phi_I^+|}, saturating.
    int64_t expected_dimension() const {
        __int128 d = group.order();
        for (std::size_t c = 0; c < components.components.size(); ++c)
            for (std::size_t k = 0; k < roots.component_size(c); ++k) {
                d *= components.N[c];
                if (d > INT64_MAX) return INT64_MAX;
            }
        return static_cast<int64_t>(d);
    }

    /// prod_I N_I^{|Phi_I^+|}
    int64_t nichols_dimension() const { return expected_dimension() / group.order(); }
};

namespace detail {
inline std::string vertex_pair(int i, int j) { return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"; }
}  // namespace detail

/**
 * Checks <chi_i, g_i> != 1, that the braiding is of Cartan type (matching a supplied Cartan
 * matrix) and of finite type, builds components and the root system, and records the standing
 * odd-order and G_2 hypotheses without failing on them.
 */
inline Datum validate_datum(const RawDatum& raw) {
    const std::size_t n = raw.g.size();
    detail::require(n >= 1, ErrorKind::InvalidDatum, "a datum needs at least one vertex");
    detail::require(raw.chi.size() == n, ErrorKind::LengthMismatch,
                    std::to_string(n) + " group elements but " + std::to_string(raw.chi.size()) + " characters");
    for (std::size_t i = 0; i < n; ++i) {
        detail::require(raw.group.contains(raw.g[i]), ErrorKind::GroupMismatch, "g_" + std::to_string(i + 1) + " is not an element of the group");
        detail::require(raw.group.contains(raw.chi[i]), ErrorKind::GroupMismatch, "chi_" + std::to_string(i + 1) + " is not a character of the group");
    }
    Datum d;
    d.group = raw.group;
    d.g = raw.g;
    d.chi = raw.chi;
    d.braiding = braiding_from_data(d.g, d.chi);
    for (std::size_t i = 0; i < n; ++i)
        detail::require(!d.braiding(i, i).is_one(), ErrorKind::InvalidDatum,
                        "<chi_i, g_i> = 1 at vertex " + std::to_string(i + 1) + " (witness " + detail::vertex_pair(static_cast<int>(i), static_cast<int>(i)) +
                            "); every <chi_i, g_i> must differ from 1");
    const auto det = detect_cartan(d.braiding);
    if (!det.is_cartan) {
        const auto [i, j] = *det.witness;
        detail::fail(ErrorKind::InvalidDatum, "braiding is not of Cartan type at " + detail::vertex_pair(i, j) +
                                                  ": <chi_j, g_i><chi_i, g_j> is not a power <chi_i, g_i>^a with -ord < a <= 0");
    }
    if (raw.cartan) {
        detail::require(raw.cartan->size() == n, ErrorKind::LengthMismatch, "supplied Cartan matrix has the wrong size");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                detail::require((*raw.cartan)(i, j) == det.cartan(i, j), ErrorKind::InvalidDatum,
                                "supplied a_ij = " + std::to_string((*raw.cartan)(i, j)) + " at " + detail::vertex_pair(static_cast<int>(i), static_cast<int>(j)) +
                                    " but the braiding forces a_ij = " + std::to_string(det.cartan(i, j)));
    }
    d.cartan = det.cartan;
    const auto cls = classify(d.cartan);
    if (!cls.finite) {
        std::string vs;
        for (int v : cls.components[*cls.offending].vertices) vs += (vs.empty() ? "" : ",") + std::to_string(v + 1);
        detail::fail(ErrorKind::InvalidDatum, "Cartan matrix " + to_string(d.cartan) + " is not of finite type on vertices {" + vs + "}: " + cls.reason);
    }
    d.components = components_of(det, d.braiding);
    d.roots = build_root_system(d.cartan);
    for (std::size_t i = 0; i < n && d.odd_orders; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (d.braiding(i, j).order() % 2 == 0) {
                d.odd_orders = false;
                d.even_order_witness = {static_cast<int>(i), static_cast<int>(j)};
                break;
            }
    for (std::size_t c = 0; c < cls.components.size(); ++c)
        if (cls.components[c].type.family == 'G' && d.components.N[c] % 3 == 0) {
            d.g2_not_divisible_by_3 = false;
            d.g2_witness = c;
            break;
        }
    return d;
}

inline Datum make_datum(const AbelianGroup& group, const std::vector<std::vector<int64_t>>& g, const std::vector<std::vector<int64_t>>& chi,
                        std::optional<IntMatrix> cartan = std::nullopt) {
    RawDatum raw{group, {}, {}, std::move(cartan)};
    for (const auto& e : g) raw.g.push_back(group.element(e));
    for (const auto& c : chi) raw.chi.push_back(group.character(c));
    return validate_datum(raw);
}

/**
 * Frobenius-Lusztig datum: Gamma = (Z/N)^theta, g_i = e_i, chi_j(e_i) = q^{d_i a_ij} with
 * q = zeta_N^k, d the normalized symmetrizer (components take their own symmetrizers).
 */
inline Datum fl_datum(const IntMatrix& a, int64_t N, int64_t k = 1) {
    const auto cls = classify(a);
    detail::require(cls.finite, ErrorKind::Malformed, "FL datum needs a finite Cartan matrix");
    const std::size_t n = a.size();
    std::vector<int> d(n, 1);
    for (const auto& comp : cls.components)
        for (std::size_t t = 0; t < comp.vertices.size(); ++t) d[static_cast<std::size_t>(comp.vertices[t])] = comp.symmetrizer[t];
    const AbelianGroup group(std::vector<int64_t>(n, N));
    std::vector<std::vector<int64_t>> g(n, std::vector<int64_t>(n, 0)), chi(n, std::vector<int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        g[i][i] = 1;
        for (std::size_t j = 0; j < n; ++j) chi[j][i] = k * d[i] * a(i, j);
    }
    return make_datum(group, g, chi, a);
}

}  // namespace pointed
