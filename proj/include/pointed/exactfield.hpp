#pragma once

/**
 * @file exactfield.hpp
 * @brief Exact arithmetic in cyclotomic fields Q(zeta_L) and exact linear algebra over them.
 *
 * Elements are stored in the power basis 1, x, ..., x^{phi(L)-1} of Q[x]/(Phi_L) with
 * arbitrary precision rational coordinates. Ranks decide every dimension this library
 * reports, so nothing here ever falls back to floating point.
 *
 * @code{.cpp}
 * auto z = embed_root(RootOfUnity(3, 1), 3);   // zeta_3
 * auto s = CycloNum::one(3) + z + z * z;        // 1 + zeta_3 + zeta_3^2 == 0
 * @endcode
 */

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pointed/error.hpp"

namespace pointed {

using Rational = mpq_class;

/// Nonnegative residue of a modulo m (m > 0).
inline int64_t mod(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline int64_t euler_phi(int64_t n) {
    int64_t result = n;
    for (int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

inline bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace detail {

/// Phi_L together with x^e mod Phi_L for 0 <= e < L. Integer coefficients since Phi_L is monic.
struct CyclotomicTables {
    int64_t conductor = 1;
    std::size_t degree = 1;
    std::vector<int64_t> phi;                  // coefficients, low to high, size degree + 1
    std::vector<std::vector<int64_t>> powers;  // powers[e] has size degree
};

inline std::vector<int64_t> poly_exact_div(std::vector<int64_t> num, const std::vector<int64_t>& den) {
    // den is monic
    const std::size_t dn = den.size() - 1;
    std::vector<int64_t> quot(num.size() - dn, 0);
    for (std::size_t k = num.size(); k-- > dn;) {
        int64_t c = num[k];
        quot[k - dn] = c;
        if (c == 0) continue;
        for (std::size_t t = 0; t <= dn; ++t) num[k - dn + t] -= c * den[t];
    }
    for (std::size_t t = 0; t < dn; ++t)
        require(num[t] == 0, ErrorKind::Internal, "cyclotomic division left a remainder");
    return quot;
}

inline std::unique_ptr<CyclotomicTables> build_tables(int64_t L, const std::vector<int64_t>& phi) {
    auto t = std::make_unique<CyclotomicTables>();
    t->conductor = L;
    t->phi = phi;
    t->degree = phi.size() - 1;
    const std::size_t n = t->degree;
    t->powers.assign(static_cast<std::size_t>(L), std::vector<int64_t>(n, 0));
    std::vector<int64_t> cur(n, 0);
    cur[0] = 1;
    for (int64_t e = 0; e < L; ++e) {
        t->powers[static_cast<std::size_t>(e)] = cur;
        // multiply by x and reduce
        std::vector<int64_t> next(n, 0);
        int64_t top = cur[n - 1];
        for (std::size_t i = n - 1; i > 0; --i) next[i] = cur[i - 1];
        next[0] = 0;
        if (top != 0)
            for (std::size_t i = 0; i < n; ++i) next[i] -= top * phi[i];
        cur = std::move(next);
    }
    return t;
}

inline const CyclotomicTables& tables(int64_t L) {
    static std::mutex guard;
    static std::map<int64_t, std::unique_ptr<CyclotomicTables>> cache;
    require(L >= 1, ErrorKind::ConductorMismatch, "conductor must be positive");
    std::lock_guard lock(guard);
    auto it = cache.find(L);
    if (it != cache.end()) return *it->second;
    // Phi_L = (x^L - 1) / prod_{d | L, d < L} Phi_d
    std::vector<int64_t> num(static_cast<std::size_t>(L) + 1, 0);
    num[0] = -1;
    num[static_cast<std::size_t>(L)] = 1;
    for (int64_t d = 1; d < L; ++d) {
        if (L % d != 0) continue;
        auto jt = cache.find(d);
        if (jt == cache.end()) {
            // recursion without the lock held would deadlock; compute divisors bottom-up instead
            std::vector<int64_t> dnum(static_cast<std::size_t>(d) + 1, 0);
            dnum[0] = -1;
            dnum[static_cast<std::size_t>(d)] = 1;
            for (int64_t e = 1; e < d; ++e)
                if (d % e == 0) dnum = poly_exact_div(dnum, cache.at(e)->phi);
            jt = cache.emplace(d, build_tables(d, dnum)).first;
        }
        num = poly_exact_div(num, jt->second->phi);
    }
    return *cache.emplace(L, build_tables(L, num)).first->second;
}

}  // namespace detail

/// Coefficients of the L-th cyclotomic polynomial, lowest degree first.
inline const std::vector<int64_t>& cyclotomic_polynomial(int64_t L) { return detail::tables(L).phi; }

/**
 * zeta_L^k, stored as given but compared through the canonical form (L/g, k/g), g = gcd(k, L).
 */
class RootOfUnity {
public:
    RootOfUnity() = default;
    RootOfUnity(int64_t modulus, int64_t exponent) : modulus_(modulus) {
        detail::require(modulus > 0, ErrorKind::ConductorMismatch, "root of unity needs a positive modulus");
        exponent_ = mod(exponent, modulus);
    }

    static RootOfUnity one() { return {}; }

    int64_t modulus() const noexcept { return modulus_; }
    int64_t exponent() const noexcept { return exponent_; }

    /// Multiplicative order.
    int64_t order() const noexcept { return modulus_ / std::gcd(exponent_, modulus_); }

    bool is_one() const noexcept { return exponent_ == 0; }

    RootOfUnity canonical() const {
        const int64_t g = std::gcd(exponent_, modulus_);
        return {modulus_ / g, exponent_ / g};
    }

    /// Exponent k' with this == zeta_L^{k'}; requires order() | L.
    int64_t exponent_in(int64_t L) const {
        const auto c = canonical();
        detail::require(L % c.modulus_ == 0, ErrorKind::ConductorMismatch,
                        "root of order " + std::to_string(c.modulus_) + " does not live in mu_" + std::to_string(L));
        return c.exponent_ * (L / c.modulus_);
    }

    RootOfUnity inverse() const { return {modulus_, -exponent_}; }

    RootOfUnity pow(int64_t n) const {
        // exponent * n may overflow for large n; reduce n first
        return {modulus_, static_cast<int64_t>((static_cast<__int128>(exponent_) * mod(n, modulus_)) % modulus_)};
    }

    friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
        const int64_t L = std::lcm(a.modulus_, b.modulus_);
        return {L, a.exponent_ * (L / a.modulus_) + b.exponent_ * (L / b.modulus_)};
    }

    friend bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
        const auto ca = a.canonical();
        const auto cb = b.canonical();
        return ca.modulus_ == cb.modulus_ && ca.exponent_ == cb.exponent_;
    }

    /// "z^k" relative to modulus L, used in reports.
    std::string to_string(int64_t L) const { return "z^" + std::to_string(exponent_in(L)); }

    std::string to_string() const {
        const auto c = canonical();
        if (c.modulus_ == 1) return "1";
        return "zeta_" + std::to_string(c.modulus_) + "^" + std::to_string(c.exponent_);
    }

private:
    int64_t modulus_ = 1;
    int64_t exponent_ = 0;
};

/**
 * Element of Q(zeta_L) in the power basis modulo Phi_L.
 *
 * Binary operations on values with different conductors lift both operands to the lcm.
 */
class CycloNum {
public:
    CycloNum() : conductor_(1), coeffs_(1) {}

    /// Any coefficient vector; longer inputs are reduced modulo Phi_L.
    CycloNum(int64_t conductor, std::vector<Rational> coeffs) : conductor_(conductor) {
        const auto& t = detail::tables(conductor);
        coeffs_.assign(t.degree, Rational(0));
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (coeffs[k] == 0) continue;
            const auto& xp = t.powers[k % static_cast<std::size_t>(conductor)];
            for (std::size_t i = 0; i < t.degree; ++i)
                if (xp[i] != 0) coeffs_[i] += coeffs[k] * xp[i];
        }
    }

    static CycloNum zero(int64_t L) { return CycloNum(L, {}); }
    static CycloNum from_rational(int64_t L, const Rational& q) { return CycloNum(L, {q}); }
    static CycloNum one(int64_t L) { return from_rational(L, 1); }

    /// zeta_L^e.
    static CycloNum root_power(int64_t L, int64_t e) {
        const auto& t = detail::tables(L);
        CycloNum r;
        r.conductor_ = L;
        const auto& xp = t.powers[static_cast<std::size_t>(mod(e, L))];
        r.coeffs_.assign(xp.begin(), xp.end());
        return r;
    }

    int64_t conductor() const noexcept { return conductor_; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    std::size_t degree() const noexcept { return coeffs_.size(); }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
    }

    /// Same value viewed in Q(zeta_M), L | M.
    CycloNum lift(int64_t M) const {
        if (M == conductor_) return *this;
        detail::require(M % conductor_ == 0, ErrorKind::ConductorMismatch,
                        "cannot lift Q(zeta_" + std::to_string(conductor_) + ") into Q(zeta_" + std::to_string(M) + ")");
        const int64_t step = M / conductor_;
        std::vector<Rational> spread(coeffs_.size() == 0 ? 0 : static_cast<std::size_t>(step) * (coeffs_.size() - 1) + 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) spread[i * static_cast<std::size_t>(step)] = coeffs_[i];
        return CycloNum(M, std::move(spread));
    }

    CycloNum operator-() const {
        CycloNum r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    CycloNum& operator+=(const CycloNum& o) {
        if (o.conductor_ != conductor_) return *this = *this + o;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    CycloNum& operator-=(const CycloNum& o) {
        if (o.conductor_ != conductor_) return *this = *this - o;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    CycloNum& operator*=(const CycloNum& o) { return *this = *this * o; }
    CycloNum& operator/=(const CycloNum& o) { return *this = *this / o; }

    friend CycloNum operator+(const CycloNum& a, const CycloNum& b) {
        if (a.conductor_ != b.conductor_) {
            const int64_t L = std::lcm(a.conductor_, b.conductor_);
            return a.lift(L) + b.lift(L);
        }
        CycloNum r = a;
        r += b;
        return r;
    }
    friend CycloNum operator-(const CycloNum& a, const CycloNum& b) {
        if (a.conductor_ != b.conductor_) {
            const int64_t L = std::lcm(a.conductor_, b.conductor_);
            return a.lift(L) - b.lift(L);
        }
        CycloNum r = a;
        r -= b;
        return r;
    }

    friend CycloNum operator*(const CycloNum& a, const CycloNum& b) {
        if (a.conductor_ != b.conductor_) {
            const int64_t L = std::lcm(a.conductor_, b.conductor_);
            return a.lift(L) * b.lift(L);
        }
        const std::size_t n = a.coeffs_.size();
        if (n == 1) {
            CycloNum r = a;
            r.coeffs_[0] *= b.coeffs_[0];
            return r;
        }
        std::vector<Rational> prod(2 * n - 1);
        for (std::size_t i = 0; i < n; ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (b.coeffs_[j] != 0) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        const auto& phi = detail::tables(a.conductor_).phi;
        for (std::size_t k = prod.size(); k-- > n;) {
            if (prod[k] == 0) continue;
            const Rational c = prod[k];
            for (std::size_t t = 0; t < n; ++t)
                if (phi[t] != 0) prod[k - n + t] -= c * phi[t];
            prod[k] = 0;
        }
        prod.resize(n);
        CycloNum r;
        r.conductor_ = a.conductor_;
        r.coeffs_ = std::move(prod);
        return r;
    }

    friend CycloNum operator*(const CycloNum& a, const Rational& q) {
        CycloNum r = a;
        for (auto& c : r.coeffs_) c *= q;
        return r;
    }

    /// Multiplication by zeta_L^e where L is this value's conductor.
    CycloNum times_root(int64_t e) const {
        e = mod(e, conductor_);
        if (e == 0) return *this;
        return *this * root_power(conductor_, e);
    }

    CycloNum inverse() const {
        detail::require(!is_zero(), ErrorKind::Malformed, "inverse of zero in a cyclotomic field");
        const std::size_t n = coeffs_.size();
        if (n == 1) return from_rational(conductor_, 1 / coeffs_[0]);
        // Solve (multiplication-by-this matrix) * v = e_0 by rational elimination.
        std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
        CycloNum col = *this;
        const CycloNum x = root_power(conductor_, 1);
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < n; ++i) m[i][j] = col.coeffs_[i];
            col = col * x;
        }
        m[0][n] = 1;
        for (std::size_t c = 0, r = 0; c < n; ++c, ++r) {
            std::size_t p = r;
            while (p < n && m[p][c] == 0) ++p;
            detail::require(p < n, ErrorKind::Internal, "singular multiplication matrix");
            std::swap(m[p], m[r]);
            const Rational inv = 1 / m[r][c];
            for (std::size_t k = c; k <= n; ++k) m[r][k] *= inv;
            for (std::size_t i = 0; i < n; ++i) {
                if (i == r || m[i][c] == 0) continue;
                const Rational f = m[i][c];
                for (std::size_t k = c; k <= n; ++k) m[i][k] -= f * m[r][k];
            }
        }
        std::vector<Rational> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = m[i][n];
        return CycloNum(conductor_, std::move(v));
    }

    friend CycloNum operator/(const CycloNum& a, const CycloNum& b) { return a * b.inverse(); }

    CycloNum pow(int64_t n) const {
        if (n < 0) return inverse().pow(-n);
        CycloNum result = one(conductor_), base = *this;
        while (n > 0) {
            if (n & 1) result = result * base;
            base = base * base;
            n >>= 1;
        }
        return result;
    }

    friend bool operator==(const CycloNum& a, const CycloNum& b) {
        if (a.conductor_ != b.conductor_) {
            const int64_t L = std::lcm(a.conductor_, b.conductor_);
            return a.lift(L).coeffs_ == b.lift(L).coeffs_;
        }
        return a.coeffs_ == b.coeffs_;
    }

    /// Q-linear combination of powers "z^k" of zeta_L; parseable back by the datum reader.
    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            Rational c = coeffs_[k];
            if (c == 0) continue;
            const bool neg = c < 0;
            if (neg) c = -c;
            if (first)
                os << (neg ? "-" : "");
            else
                os << (neg ? " - " : " + ");
            first = false;
            if (k == 0)
                os << c.get_str();
            else if (c == 1)
                os << "z^" << k;
            else
                os << c.get_str() << "*z^" << k;
        }
        return first ? "0" : os.str();
    }

private:
    int64_t conductor_;
    std::vector<Rational> coeffs_;
};

/// Power-basis image of r in Q(zeta_L); requires ord(r) | L.
inline CycloNum embed_root(const RootOfUnity& r, int64_t L) { return CycloNum::root_power(L, r.exponent_in(L)); }

/// Image of sum_e counts[e] * zeta_L^e.
template <class T>
CycloNum from_root_counts(int64_t L, std::span<const T> counts) {
    const auto& t = detail::tables(L);
    std::vector<Rational> c(t.degree);
    for (std::size_t e = 0; e < counts.size(); ++e) {
        if (counts[e] == 0) continue;
        const auto& xp = t.powers[e % static_cast<std::size_t>(L)];
        for (std::size_t i = 0; i < t.degree; ++i)
            if (xp[i] != 0) c[i] += Rational(counts[e]) * xp[i];
    }
    return CycloNum(L, std::move(c));
}

inline CycloNum from_root_counts(int64_t L, const std::vector<int64_t>& counts) {
    return from_root_counts<int64_t>(L, std::span<const int64_t>(counts));
}

/**
 * Dense matrix over a single cyclotomic field; all entries are lifted to a common conductor
 * on construction.
 */
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols, int64_t conductor = 1)
        : rows_(rows), cols_(cols), conductor_(conductor), entries_(rows * cols, CycloNum::zero(conductor)) {}

    ExactMatrix(std::size_t rows, std::size_t cols, std::vector<CycloNum> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        detail::require(entries_.size() == rows * cols, ErrorKind::LengthMismatch, "matrix entry count mismatch");
        conductor_ = 1;
        for (const auto& e : entries_) conductor_ = std::lcm(conductor_, e.conductor());
        for (auto& e : entries_) e = e.lift(conductor_);
    }

    static ExactMatrix identity(std::size_t n, int64_t L = 1) {
        ExactMatrix m(n, n, L);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = CycloNum::one(L);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    int64_t conductor() const noexcept { return conductor_; }

    const CycloNum& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    CycloNum& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    void set(std::size_t r, std::size_t c, const CycloNum& v) {
        if (v.conductor() != conductor_) {
            const int64_t L = std::lcm(conductor_, v.conductor());
            if (L != conductor_) {
                for (auto& e : entries_) e = e.lift(L);
                conductor_ = L;
            }
            at(r, c) = v.lift(L);
        } else {
            at(r, c) = v;
        }
    }

    ExactMatrix transpose() const {
        ExactMatrix t(cols_, rows_, conductor_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    int64_t conductor_ = 1;
    std::vector<CycloNum> entries_;
};

/// Exact rank by Gaussian elimination with rational pivoting.
inline std::size_t rank(const ExactMatrix& input) {
    ExactMatrix m = input;
    const std::size_t R = m.rows(), C = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && m.at(p, c).is_zero()) ++p;
        if (p == R) continue;
        if (p != r)
            for (std::size_t k = c; k < C; ++k) std::swap(m.at(p, k), m.at(r, k));
        const CycloNum inv = m.at(r, c).inverse();
        for (std::size_t i = r + 1; i < R; ++i) {
            if (m.at(i, c).is_zero()) continue;
            const CycloNum f = m.at(i, c) * inv;
            for (std::size_t k = c; k < C; ++k)
                if (!m.at(r, k).is_zero()) m.at(i, k) -= f * m.at(r, k);
        }
        ++r;
    }
    return r;
}

/// Sparse row: (column, nonzero value) pairs sorted by column.
using SparseRow = std::vector<std::pair<uint32_t, CycloNum>>;

/**
 * Incrementally maintained row echelon basis. The pivot of a row is its largest column, so
 * with columns numbered increasingly in a monomial order the pivots are leading monomials.
 */
class SparseEchelon {
public:
    /// Reduces row against the basis; returns true and stores it when it is independent.
    bool insert(SparseRow row) {
        while (!row.empty()) {
            const uint32_t lead = row.back().first;
            auto it = pivots_.find(lead);
            if (it == pivots_.end()) {
                const CycloNum inv = row.back().second.inverse();
                for (auto& [col, v] : row) v = v * inv;
                pivots_.emplace(lead, std::move(row));
                return true;
            }
            row = axpy(row, row.back().second, it->second);
        }
        return false;
    }

    std::size_t rank() const noexcept { return pivots_.size(); }
    bool is_pivot(uint32_t col) const { return pivots_.count(col) != 0; }

    std::vector<uint32_t> pivot_columns() const {
        std::vector<uint32_t> out;
        out.reserve(pivots_.size());
        for (const auto& [c, row] : pivots_) out.push_back(c);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    /// row - f * pivot, dropping cancelled entries.
    static SparseRow axpy(const SparseRow& row, const CycloNum& f, const SparseRow& pivot) {
        SparseRow out;
        out.reserve(row.size() + pivot.size());
        std::size_t i = 0, j = 0;
        while (i < row.size() || j < pivot.size()) {
            if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
                out.push_back(row[i++]);
            } else if (i == row.size() || pivot[j].first < row[i].first) {
                out.emplace_back(pivot[j].first, -(f * pivot[j].second));
                ++j;
            } else {
                CycloNum v = row[i].second - f * pivot[j].second;
                if (!v.is_zero()) out.emplace_back(row[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        return out;
    }

    std::unordered_map<uint32_t, SparseRow> pivots_;
};

/// Dimension of the span of equal-length coefficient vectors.
inline std::size_t row_space_dim(const std::vector<std::vector<CycloNum>>& vectors) {
    if (vectors.empty()) return 0;
    const std::size_t n = vectors.front().size();
    SparseEchelon ech;
    for (const auto& v : vectors) {
        detail::require(v.size() == n, ErrorKind::LengthMismatch, "row_space_dim: vectors of different lengths");
        SparseRow row;
        for (std::size_t c = 0; c < n; ++c)
            if (!v[c].is_zero()) row.emplace_back(static_cast<uint32_t>(c), v[c]);
        ech.insert(std::move(row));
    }
    return ech.rank();
}

}  // namespace pointed
