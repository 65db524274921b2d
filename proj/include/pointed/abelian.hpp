#pragma once

/**
 * @file abelian.hpp
 * @brief Finite abelian groups given as explicit sums of cyclic groups, their elements,
 * characters, and the pairing <chi, g>.
 *
 * A group is the list of orders (M_1, ..., M_s) of fixed generators Y_1, ..., Y_s. Elements
 * and characters are exponent vectors reduced componentwise; the character with exponents
 * (c_1, ..., c_s) sends Y_h to zeta_{M_h}^{c_h}. Two groups are equal only when their order
 * lists match, no Smith normal form is attempted.
 */

#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "pointed/error.hpp"
#include "pointed/exactfield.hpp"

namespace pointed {

struct ElementTag {};
struct CharacterTag {};

/**
 * Exponent vector over a fixed cyclic decomposition. Written multiplicatively: g * h adds
 * exponents, g.pow(n) scales them.
 */
template <class Tag>
class ExponentVector {
public:
    ExponentVector() = default;
    ExponentVector(std::vector<int64_t> orders, std::vector<int64_t> exps) : orders_(std::move(orders)), exps_(std::move(exps)) {
        detail::require(orders_.size() == exps_.size(), ErrorKind::LengthMismatch,
                        "exponent vector has length " + std::to_string(exps_.size()) + ", group has rank " +
                            std::to_string(orders_.size()));
        for (std::size_t h = 0; h < exps_.size(); ++h) exps_[h] = mod(exps_[h], orders_[h]);
    }

    const std::vector<int64_t>& orders() const noexcept { return orders_; }
    const std::vector<int64_t>& exponents() const noexcept { return exps_; }
    std::size_t rank() const noexcept { return exps_.size(); }

    bool is_identity() const {
        return std::all_of(exps_.begin(), exps_.end(), [](int64_t e) { return e == 0; });
    }

    /// Smallest n >= 1 with n * g = 0.
    int64_t order() const {
        int64_t n = 1;
        for (std::size_t h = 0; h < exps_.size(); ++h) n = std::lcm(n, orders_[h] / std::gcd(exps_[h], orders_[h]));
        return n;
    }

    ExponentVector inverse() const {
        ExponentVector r = *this;
        for (std::size_t h = 0; h < exps_.size(); ++h) r.exps_[h] = mod(-exps_[h], orders_[h]);
        return r;
    }

    ExponentVector pow(int64_t n) const {
        ExponentVector r = *this;
        for (std::size_t h = 0; h < exps_.size(); ++h)
            r.exps_[h] = static_cast<int64_t>(mod(static_cast<int64_t>((static_cast<__int128>(exps_[h]) * mod(n, orders_[h])) % orders_[h]), orders_[h]));
        return r;
    }

    friend ExponentVector operator*(const ExponentVector& a, const ExponentVector& b) {
        check_same(a, b);
        ExponentVector r = a;
        for (std::size_t h = 0; h < a.exps_.size(); ++h) r.exps_[h] = mod(a.exps_[h] + b.exps_[h], a.orders_[h]);
        return r;
    }

    ExponentVector& operator*=(const ExponentVector& b) { return *this = *this * b; }

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
    friend auto operator<=>(const ExponentVector& a, const ExponentVector& b) {
        if (auto c = a.orders_ <=> b.orders_; c != 0) return c;
        return a.exps_ <=> b.exps_;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "(";
        for (std::size_t h = 0; h < exps_.size(); ++h) os << (h ? "," : "") << exps_[h];
        os << ")";
        return os.str();
    }

    static void check_same(const ExponentVector& a, const ExponentVector& b) {
        detail::require(a.orders_ == b.orders_, ErrorKind::GroupMismatch, "operands belong to different groups");
    }

private:
    std::vector<int64_t> orders_;
    std::vector<int64_t> exps_;
};

using GroupElement = ExponentVector<ElementTag>;
using Character = ExponentVector<CharacterTag>;

/// Default cap on the number of group elements or characters enumerated.
inline constexpr int64_t kDefaultGroupBudget = 1 << 20;

class AbelianGroup {
public:
    AbelianGroup() = default;
    explicit AbelianGroup(std::vector<int64_t> orders) : orders_(std::move(orders)) {
        for (auto m : orders_)
            detail::require(m >= 2, ErrorKind::Malformed, "cyclic factor orders must be >= 2, got " + std::to_string(m));
    }

    /// (Z/p)^s
    static AbelianGroup elementary(int64_t p, std::size_t s) { return AbelianGroup(std::vector<int64_t>(s, p)); }

    const std::vector<int64_t>& orders() const noexcept { return orders_; }
    std::size_t rank() const noexcept { return orders_.size(); }

    /// |Gamma|, saturating at INT64_MAX.
    int64_t order() const {
        __int128 n = 1;
        for (auto m : orders_) {
            n *= m;
            if (n > INT64_MAX) return INT64_MAX;
        }
        return static_cast<int64_t>(n);
    }

    int64_t exponent() const {
        int64_t e = 1;
        for (auto m : orders_) e = std::lcm(e, m);
        return e;
    }

    GroupElement identity() const { return element(std::vector<int64_t>(orders_.size(), 0)); }
    Character trivial_character() const { return character(std::vector<int64_t>(orders_.size(), 0)); }

    GroupElement element(std::vector<int64_t> exps) const { return GroupElement(orders_, std::move(exps)); }
    Character character(std::vector<int64_t> exps) const { return Character(orders_, std::move(exps)); }

    /// Y_h
    GroupElement generator(std::size_t h) const {
        std::vector<int64_t> e(orders_.size(), 0);
        e.at(h) = 1;
        return element(std::move(e));
    }

    bool contains(const GroupElement& g) const { return g.orders() == orders_; }
    bool contains(const Character& c) const { return c.orders() == orders_; }

    /// Visits every exponent vector in lexicographic order.
    void for_each_exponents(const std::function<void(const std::vector<int64_t>&)>& visit, int64_t budget = kDefaultGroupBudget) const {
        if (order() > budget)
            throw BudgetExceeded("group of order " + std::to_string(order()) + " exceeds enumeration budget " + std::to_string(budget));
        std::vector<int64_t> e(orders_.size(), 0);
        while (true) {
            visit(e);
            std::size_t h = orders_.size();
            while (h > 0) {
                --h;
                if (++e[h] < orders_[h]) break;
                e[h] = 0;
                if (h == 0) return;
            }
            if (orders_.empty()) return;
        }
    }

    std::vector<GroupElement> enumerate_elements(int64_t budget = kDefaultGroupBudget) const {
        std::vector<GroupElement> out;
        for_each_exponents([&](const std::vector<int64_t>& e) { out.push_back(element(e)); }, budget);
        return out;
    }

    std::vector<Character> enumerate_characters(int64_t budget = kDefaultGroupBudget) const {
        std::vector<Character> out;
        for_each_exponents([&](const std::vector<int64_t>& e) { out.push_back(character(e)); }, budget);
        return out;
    }

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

private:
    std::vector<int64_t> orders_;
};

/// <chi, g> = zeta_L^{sum_h (L/M_h) c_h e_h}, L = lcm(M_h).
inline RootOfUnity pair(const Character& chi, const GroupElement& g) {
    detail::require(chi.orders() == g.orders(), ErrorKind::GroupMismatch, "pairing a character and an element of different groups");
    int64_t L = 1;
    for (auto m : g.orders()) L = std::lcm(L, m);
    __int128 k = 0;
    for (std::size_t h = 0; h < g.rank(); ++h)
        k += static_cast<__int128>(L / g.orders()[h]) * chi.exponents()[h] * g.exponents()[h];
    return RootOfUnity(L, static_cast<int64_t>(k % L));
}

inline int64_t element_order(const GroupElement& g) { return g.order(); }

}  // namespace pointed
