#pragma once

/**
 * @file braiding.hpp
 * @brief Diagonal braiding matrices: Cartan-type detection, Dynkin components, bicharacter
 * twisting, symmetrization and the Frobenius-Lusztig normal form b_ij = q^{d_i a_ij}.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pointed/abelian.hpp"
#include "pointed/error.hpp"
#include "pointed/exactfield.hpp"
#include "pointed/rootsys.hpp"
#include "pointed/square_matrix.hpp"

namespace pointed {

/// b_ij = <chi_j, g_i>; c(x_i (x) x_j) = b_ij x_j (x) x_i.
using BraidingMatrix = SquareMatrix<RootOfUnity>;

inline BraidingMatrix braiding_from_data(const std::vector<GroupElement>& g, const std::vector<Character>& chi) {
    detail::require(g.size() == chi.size(), ErrorKind::LengthMismatch, "need as many characters as group elements");
    BraidingMatrix b(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) b(i, j) = pair(chi[j], g[i]);
    return b;
}

/// Least common multiple of the orders of all entries.
inline int64_t braiding_conductor(const BraidingMatrix& b) {
    int64_t L = 1;
    for (const auto& r : b.entries()) L = std::lcm(L, r.order());
    return L;
}

struct CartanTypeResult {
    IntMatrix cartan;
    bool is_cartan = false;
    std::optional<std::pair<int, int>> witness;  ///< 0-based (i, j) of the first failure
    std::string reason;
};

/**
 * a_ii = 2 and, for i != j, the unique a_ij in (-ord b_ii, 0] with b_ij b_ji = b_ii^{a_ij};
 * fails with a witness when some b_ii = 1 or no such a_ij exists.
 */
inline CartanTypeResult detect_cartan(const BraidingMatrix& b) {
    const std::size_t n = b.size();
    CartanTypeResult out;
    out.cartan = IntMatrix(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (b(i, i).is_one()) {
            out.witness = {static_cast<int>(i), static_cast<int>(i)};
            out.reason = "b_ii = 1";
            return out;
        }
        out.cartan(i, i) = 2;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const int64_t ord = b(i, i).order();
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const RootOfUnity target = b(i, j) * b(j, i);
            std::optional<int> found;
            for (int64_t a = 0; a > -ord; --a)
                if (b(i, i).pow(a) == target) {
                    found = static_cast<int>(a);
                    break;
                }
            if (!found) {
                out.witness = {static_cast<int>(i), static_cast<int>(j)};
                out.reason = "b_ij b_ji is not a power of b_ii";
                return out;
            }
            out.cartan(i, j) = *found;
        }
    }
    out.is_cartan = true;
    return out;
}

struct ComponentStructure {
    std::vector<std::vector<int>> components;  ///< blocks, ordered by smallest vertex
    std::vector<int64_t> N;                    ///< N_I = ord(q_i) for i in block I
    std::vector<int> order;                    ///< vertices listed block by block (contiguous reordering)

    std::size_t component_of(int vertex) const {
        for (std::size_t c = 0; c < components.size(); ++c)
            for (int v : components[c])
                if (v == vertex) return c;
        detail::fail(ErrorKind::Internal, "vertex " + std::to_string(vertex + 1) + " lies in no component");
    }

    bool joined(int i, int j) const { return component_of(i) == component_of(j); }
};

/// Dynkin components with N_I; throws InconsistentDatum when ord(q_i) varies within a block.
inline ComponentStructure components_of(const CartanTypeResult& c, const BraidingMatrix& b) {
    detail::require(c.is_cartan, ErrorKind::Malformed, "components requested for a braiding that is not of Cartan type");
    detail::require(is_finite_type(c.cartan), ErrorKind::Malformed, "components requested for a Cartan matrix of non-finite type");
    ComponentStructure out;
    out.components = dynkin_components(c.cartan);
    for (const auto& block : out.components) {
        const int64_t N = b(static_cast<std::size_t>(block.front()), static_cast<std::size_t>(block.front())).order();
        for (int v : block) {
            const auto Nv = b(static_cast<std::size_t>(v), static_cast<std::size_t>(v)).order();
            detail::require(Nv == N, ErrorKind::InconsistentDatum,
                            "ord(q_" + std::to_string(v + 1) + ") = " + std::to_string(Nv) + " differs from ord(q_" +
                                std::to_string(block.front() + 1) + ") = " + std::to_string(N) + " in the same component, so N_I is not well defined");
            out.order.push_back(v);
        }
        out.N.push_back(N);
    }
    return out;
}

/// b^F_ij = omega_ij omega_ji^{-1} b_ij for i != j; diagonal unchanged.
inline BraidingMatrix twist_braiding(const BraidingMatrix& b, const BraidingMatrix& omega) {
    detail::require(b.size() == omega.size(), ErrorKind::LengthMismatch, "cocycle and braiding have different rank");
    BraidingMatrix out = b;
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (i != j) out(i, j) = omega(i, j) * omega(j, i).inverse() * b(i, j);
    return out;
}

/// The unique square root of odd order: y^{(m+1)/2} for ord(y) = m odd.
inline RootOfUnity odd_sqrt(const RootOfUnity& y) {
    const int64_t m = y.order();
    detail::require(m % 2 == 1, ErrorKind::Unsupported, "square root requested for a root of unity of even order " + std::to_string(m));
    return y.pow((m + 1) / 2).canonical();
}

struct Symmetrized {
    BraidingMatrix braiding;
    BraidingMatrix omega;
};

/// Symmetric b^F with b^F_ij = sqrt(b_ij b_ji) and the realizing omega (omega_ij = b^F_ij / b_ij for i < j).
inline Symmetrized symmetrize(const BraidingMatrix& b) {
    const std::size_t n = b.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            detail::require(b(i, j).order() % 2 == 1, ErrorKind::Unsupported,
                            "b_" + std::to_string(i + 1) + std::to_string(j + 1) + " has even order " + std::to_string(b(i, j).order()) +
                                "; symmetrization needs odd orders");
    Symmetrized s{b, BraidingMatrix(n, RootOfUnity::one())};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const RootOfUnity r = odd_sqrt(b(i, j) * b(j, i));
            s.braiding(i, j) = r;
            s.braiding(j, i) = r;
            s.omega(i, j) = r * b(i, j).inverse();
        }
    return s;
}

inline bool is_symmetric(const BraidingMatrix& b) {
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (!(b(i, j) == b(j, i))) return false;
    return true;
}

/// b_ij = q^{d_i a_ij}.
inline BraidingMatrix fl_braiding(const RootOfUnity& q, const std::vector<int>& d, const IntMatrix& a) {
    detail::require(d.size() == a.size(), ErrorKind::LengthMismatch, "symmetrizer length differs from Cartan rank");
    BraidingMatrix b(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) b(i, j) = q.pow(static_cast<int64_t>(d[i]) * a(i, j)).canonical();
    return b;
}

struct FLForm {
    bool is_fl = false;
    RootOfUnity q;
    std::vector<int> d;  ///< aligned with the requested vertex list
    std::string reason;
};

/**
 * Finds q and the symmetrizer d (min d_i = 1) with b_ij = q^{d_i a_ij} on the given connected
 * vertex set. q is searched first among roots of order dividing the entries' lcm L, then in
 * mu_{2L}, smallest exponent first; for odd L the first stage finds the unique odd-order q.
 */
inline FLForm fl_normal_form(const BraidingMatrix& b, const IntMatrix& a, const std::vector<int>& vertices) {
    FLForm out;
    const IntMatrix sub_a = a.restrict_to(vertices);
    BraidingMatrix sub_b(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = 0; j < vertices.size(); ++j)
            sub_b(i, j) = b(static_cast<std::size_t>(vertices[i]), static_cast<std::size_t>(vertices[j]));
    if (!is_symmetric(sub_b)) {
        out.reason = "braiding is not symmetric";
        return out;
    }
    auto comps = dynkin_components(sub_a);
    detail::require(comps.size() == 1, ErrorKind::Malformed, "FL normal form requires a connected vertex set");
    auto d = detail::symmetrize_component(sub_a, comps.front());
    if (!d) {
        out.reason = "Cartan matrix is not symmetrizable";
        return out;
    }
    const int64_t L = braiding_conductor(sub_b);
    for (int64_t M : {L, 2 * L}) {
        for (int64_t k = 0; k < M; ++k) {
            const RootOfUnity q(M, k);
            if (fl_braiding(q, *d, sub_a) == sub_b) {
                out.is_fl = true;
                out.q = q.canonical();
                out.d = *d;
                return out;
            }
        }
    }
    out.reason = "no q with b_ij = q^{d_i a_ij}";
    return out;
}

}  // namespace pointed
