#pragma once

/**
 * @file nichols.hpp
 * @brief Graded dimensions of the Nichols algebra of a diagonal braiding, computed as ranks
 * of quantum symmetrizers, and the PBW Hilbert series they are compared with.
 *
 * The symmetrizer S_n = sum over permutations of the braid operators T_w is evaluated through
 * the factorization
 *     S_n = (S_{n-1} (x) id) (1 + c_{n-1} + c_{n-1} c_{n-2} + ... + c_{n-1} ... c_1),
 * where c_{n-1} ... c_k moves the k-th letter to the end. Every multidegree block therefore
 * reuses the blocks of degree n-1, and block entries are kept as integer combinations of powers
 * of zeta_L (the group ring of mu_L) until the final exact rank computation.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <numeric>
#include <string>
#include <vector>

#include "pointed/braiding.hpp"
#include "pointed/error.hpp"
#include "pointed/exactfield.hpp"
#include "pointed/parallel.hpp"
#include "pointed/rootsys.hpp"

namespace pointed {

/// Word x_{i_1} ... x_{i_n} with 0-based letters.
using Word = std::vector<int>;
/// Letter multiplicities of a word.
using Multidegree = std::vector<int>;

inline Multidegree multidegree_of(const Word& w, std::size_t theta) {
    Multidegree m(theta, 0);
    for (int i : w) ++m.at(static_cast<std::size_t>(i));
    return m;
}

/// "x1x2x1" (1-based letters).
inline std::string word_to_string(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (int i : w) s += "x" + std::to_string(i + 1);
    return s;
}

/// Sparse element of the tensor algebra T(V) over Q(zeta_L).
class TensorElem {
public:
    explicit TensorElem(int64_t conductor = 1) : conductor_(conductor) {}

    static TensorElem word(int64_t L, const Word& w, const CycloNum& c) {
        TensorElem t(L);
        t.add(w, c);
        return t;
    }
    static TensorElem letter(int64_t L, int i) { return word(L, Word{i}, CycloNum::one(L)); }

    int64_t conductor() const noexcept { return conductor_; }
    const std::map<Word, CycloNum>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add(const Word& w, const CycloNum& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c.lift(conductor_));
            return;
        }
        it->second += c.lift(conductor_);
        if (it->second.is_zero()) terms_.erase(it);
    }

    /// Common length of all words; throws Malformed for inhomogeneous elements.
    std::size_t degree() const {
        detail::require(!terms_.empty(), ErrorKind::Malformed, "degree of the zero tensor is undefined");
        const std::size_t n = terms_.begin()->first.size();
        for (const auto& [w, c] : terms_) detail::require(w.size() == n, ErrorKind::Malformed, "tensor is not homogeneous");
        return n;
    }

    friend TensorElem operator+(TensorElem a, const TensorElem& b) {
        for (const auto& [w, c] : b.terms_) a.add(w, c);
        return a;
    }
    friend TensorElem operator-(TensorElem a, const TensorElem& b) {
        for (const auto& [w, c] : b.terms_) a.add(w, -c);
        return a;
    }
    friend TensorElem operator*(const CycloNum& s, const TensorElem& a) {
        TensorElem r(a.conductor_);
        for (const auto& [w, c] : a.terms_) r.add(w, s * c);
        return r;
    }
    /// Concatenation product.
    friend TensorElem operator*(const TensorElem& a, const TensorElem& b) {
        TensorElem r(std::lcm(a.conductor_, b.conductor_));
        for (const auto& [u, x] : a.terms_)
            for (const auto& [v, y] : b.terms_) {
                Word w = u;
                w.insert(w.end(), v.begin(), v.end());
                r.add(w, x * y);
            }
        return r;
    }
    friend bool operator==(const TensorElem& a, const TensorElem& b) { return (a - b).is_zero(); }

private:
    int64_t conductor_;
    std::map<Word, CycloNum> terms_;
};

/// c_k on T(V)_n, 0 <= k < n-1: swaps letters k, k+1 with coefficient b_{i_k i_{k+1}}.
inline TensorElem braid_operator(const BraidingMatrix& b, std::size_t k, const TensorElem& t) {
    const int64_t L = std::lcm(t.conductor(), braiding_conductor(b));
    TensorElem out(L);
    for (const auto& [w, c] : t.terms()) {
        detail::require(k + 1 < w.size(), ErrorKind::Malformed,
                        "braid operator c_" + std::to_string(k) + " needs words of length > " + std::to_string(k + 1));
        Word v = w;
        std::swap(v[k], v[k + 1]);
        out.add(v, c * embed_root(b(static_cast<std::size_t>(w[k]), static_cast<std::size_t>(w[k + 1])), L));
    }
    return out;
}

/// Quantum symmetrizer restricted to one multidegree; matrix rows index outputs, columns inputs.
struct SymmetrizerBlock {
    Multidegree degree;
    std::vector<Word> words;
    ExactMatrix matrix;
};

namespace detail {

/// A prime P = 1 mod L below 2^62 and an element of order L in F_P, for ordering exact work.
struct ModularField {
    uint64_t P = 0;
    std::vector<uint64_t> powers;  ///< omega^e for e in [0, L)

    static uint64_t mul(uint64_t a, uint64_t b, uint64_t P) { return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % P); }
    static uint64_t pow(uint64_t a, uint64_t e, uint64_t P) {
        uint64_t r = 1;
        for (; e; e >>= 1, a = mul(a, a, P))
            if (e & 1) r = mul(r, a, P);
        return r;
    }

    explicit ModularField(int64_t L) {
        const auto l = static_cast<uint64_t>(L);
        std::vector<uint64_t> primes_of_l;
        for (uint64_t q = 2, m = l; m > 1; ++q)
            if (m % q == 0) {
                primes_of_l.push_back(q);
                while (m % q == 0) m /= q;
            }
        // BPSW, which GMP runs first, has no counterexample below 2^64
        for (uint64_t k = ((uint64_t{1} << 62) - 1) / l; k > 0; --k) {
            const uint64_t cand = k * l + 1;
            if (mpz_class c(std::to_string(cand)); mpz_probab_prime_p(c.get_mpz_t(), 25) == 0) continue;
            P = cand;
            break;
        }
        uint64_t omega = 1;
        for (uint64_t g = 2;; ++g) {
            omega = pow(g, (P - 1) / l, P);
            if (std::all_of(primes_of_l.begin(), primes_of_l.end(), [&](uint64_t q) { return pow(omega, l / q, P) != 1; })) break;
        }
        powers.resize(l);
        powers[0] = 1;
        for (uint64_t e = 1; e < l; ++e) powers[e] = mul(powers[e - 1], omega, P);
    }

    uint64_t reduce(const int64_t* counts) const {
        unsigned __int128 acc = 0;
        for (std::size_t e = 0; e < powers.size(); ++e) {
            if (counts[e] == 0) continue;
            const uint64_t c = counts[e] >= 0 ? static_cast<uint64_t>(counts[e]) % P : P - static_cast<uint64_t>(-counts[e]) % P;
            acc = (acc + static_cast<unsigned __int128>(c) * powers[e]) % P;
        }
        return static_cast<uint64_t>(acc);
    }
};

}  // namespace detail

/**
 * Memoized multidegree blocks of quantum symmetrizers for a fixed braiding. Thread-safe:
 * concurrent callers may compute the same block twice but observe identical values.
 */
class SymmetrizerEngine {
public:
    /// Limit on block entries (words^2 * L) so dense group-ring columns stay in memory.
    static constexpr int64_t kMaxBlockEntries = int64_t{1} << 25;
    /// Counts are bounded by n!, which fits in int64 up to n = 20.
    static constexpr std::size_t kMaxDegree = 20;
    /// Limit on words^2 * rank * phi(L)^2, a proxy for the cost of one exact rank.
    static constexpr int64_t kMaxRankWork = int64_t{1} << 25;

    struct Block {
        Multidegree degree;
        std::vector<Word> words;  ///< lexicographic
        std::map<Word, uint32_t> index;
        std::vector<std::vector<int64_t>> columns;  ///< columns[c][row * L + e]: coefficient of zeta_L^e
    };

    explicit SymmetrizerEngine(const BraidingMatrix& b) : theta_(b.size()), L_(braiding_conductor(b)) {
        exps_.assign(theta_ * theta_, 0);
        for (std::size_t i = 0; i < theta_; ++i)
            for (std::size_t j = 0; j < theta_; ++j) exps_[i * theta_ + j] = b(i, j).exponent_in(L_);
    }

    int64_t conductor() const noexcept { return L_; }
    std::size_t theta() const noexcept { return theta_; }

    std::shared_ptr<const Block> block(const Multidegree& m) {
        {
            std::lock_guard lock(guard_);
            auto it = cache_.find(m);
            if (it != cache_.end()) return it->second;
        }
        auto computed = compute(m);
        std::lock_guard lock(guard_);
        return cache_.emplace(m, std::move(computed)).first->second;
    }

    /// Drops cached blocks of total degree below n.
    void evict_below(int n) {
        std::lock_guard lock(guard_);
        for (auto it = cache_.begin(); it != cache_.end();)
            it = std::accumulate(it->first.begin(), it->first.end(), 0) < n ? cache_.erase(it) : std::next(it);
    }

    CycloNum entry(const Block& blk, std::size_t row, std::size_t col) const {
        const auto& c = blk.columns[col];
        return from_root_counts<int64_t>(L_, std::span<const int64_t>(c.data() + row * L_, static_cast<std::size_t>(L_)));
    }

    SymmetrizerBlock matrix(const Block& blk) const {
        const std::size_t K = blk.words.size();
        SymmetrizerBlock out{blk.degree, blk.words, ExactMatrix(K, K, L_)};
        for (std::size_t c = 0; c < K; ++c)
            for (std::size_t r = 0; r < K; ++r) out.matrix.at(r, c) = entry(blk, r, c);
        return out;
    }

    /**
     * Exact rank over Q(zeta_L). Columns independent modulo a prime above P are independent
     * over the field, so they go into the echelon first and every other column then reduces
     * against few pivots; the order of insertion does not affect the result.
     */
    std::size_t rank(const Block& blk) const {
        const std::size_t K = blk.words.size();
        const auto order = modular_pivots_first(blk);
        const double r = static_cast<double>(std::count(order.second.begin(), order.second.end(), true));
        const double phi = static_cast<double>(euler_phi(L_));
        if (static_cast<double>(K) * static_cast<double>(K) * std::max(r, 1.0) * phi * phi > static_cast<double>(kMaxRankWork))
            throw BudgetExceeded("exact rank of a symmetrizer block of " + std::to_string(K) + " words exceeds the work limit");
        SparseEchelon ech;
        for (std::size_t c : order.first) ech.insert(column_row(blk, c));
        return ech.rank();
    }

    /// S_n(t) for homogeneous t.
    TensorElem apply(const TensorElem& t) {
        TensorElem out(std::lcm(L_, t.conductor()));
        for (const auto& [w, coeff] : t.terms()) {
            auto blk = block(multidegree_of(w, theta_));
            const std::size_t c = blk->index.at(w);
            for (const auto& [r, v] : column_row(*blk, c)) out.add(blk->words[r], coeff * v);
        }
        return out;
    }

private:
    /// Column order with the pivot columns of a modular elimination first, and the pivot mask.
    std::pair<std::vector<std::size_t>, std::vector<bool>> modular_pivots_first(const Block& blk) const {
        const std::size_t K = blk.words.size();
        std::call_once(modular_once_, [&] { modular_ = std::make_unique<detail::ModularField>(L_); });
        const auto& F = *modular_;
        const uint64_t P = F.P;
        std::vector<std::vector<uint64_t>> basis;  // reduced rows, basis[k][pivot_col[k]] = 1
        std::vector<std::size_t> pivot_col;
        std::vector<bool> is_pivot(K, false);
        std::vector<uint64_t> v(K);
        for (std::size_t c = 0; c < K; ++c) {
            const auto Lz = static_cast<std::size_t>(L_);
            for (std::size_t r = 0; r < K; ++r) v[r] = F.reduce(blk.columns[c].data() + r * Lz);
            for (std::size_t k = 0; k < basis.size(); ++k) {
                const uint64_t f = v[pivot_col[k]];
                if (f == 0) continue;
                for (std::size_t r = 0; r < K; ++r)
                    if (basis[k][r] != 0) v[r] = (v[r] + P - detail::ModularField::mul(f, basis[k][r], P)) % P;
            }
            std::size_t lead = K;
            for (std::size_t r = 0; r < K && lead == K; ++r)
                if (v[r] != 0) lead = r;
            if (lead == K) continue;
            const uint64_t inv = detail::ModularField::pow(v[lead], P - 2, P);
            for (auto& x : v) x = detail::ModularField::mul(x, inv, P);
            basis.push_back(v);
            pivot_col.push_back(lead);
            is_pivot[c] = true;
        }
        std::vector<std::size_t> order;
        order.reserve(K);
        for (std::size_t c = 0; c < K; ++c)
            if (is_pivot[c]) order.push_back(c);
        for (std::size_t c = 0; c < K; ++c)
            if (!is_pivot[c]) order.push_back(c);
        return {order, is_pivot};
    }

    SparseRow column_row(const Block& blk, std::size_t c) const {
        SparseRow row;
        for (std::size_t r = 0; r < blk.words.size(); ++r) {
            const auto* p = blk.columns[c].data() + r * L_;
            if (std::all_of(p, p + L_, [](int64_t x) { return x == 0; })) continue;
            CycloNum v = from_root_counts<int64_t>(L_, std::span<const int64_t>(p, static_cast<std::size_t>(L_)));
            if (!v.is_zero()) row.emplace_back(static_cast<uint32_t>(r), std::move(v));
        }
        return row;
    }

    std::shared_ptr<Block> compute(const Multidegree& m) {
        auto blk = std::make_shared<Block>();
        blk->degree = m;
        Word w;
        for (std::size_t i = 0; i < theta_; ++i) w.insert(w.end(), static_cast<std::size_t>(m[i]), static_cast<int>(i));
        const std::size_t n = w.size();
        detail::require(n <= kMaxDegree, ErrorKind::Budget, "symmetrizer degree " + std::to_string(n) + " exceeds " + std::to_string(kMaxDegree));
        do {
            blk->index.emplace(w, static_cast<uint32_t>(blk->words.size()));
            blk->words.push_back(w);
        } while (std::next_permutation(w.begin(), w.end()));
        const std::size_t K = blk->words.size();
        const auto Lz = static_cast<std::size_t>(L_);
        if (static_cast<double>(K) * static_cast<double>(K) * static_cast<double>(L_) > static_cast<double>(kMaxBlockEntries))
            throw BudgetExceeded("symmetrizer block of " + std::to_string(K) + " words exceeds the dense block limit");
        blk->columns.assign(K, std::vector<int64_t>(K * Lz, 0));
        if (n == 0) {
            blk->columns[0][0] = 1;
            return blk;
        }
        // sub-blocks m - e_i and the index of (u + letter i) in this block
        std::vector<std::shared_ptr<const Block>> sub(theta_);
        std::vector<std::vector<uint32_t>> append(theta_);
        for (std::size_t i = 0; i < theta_; ++i) {
            if (m[i] == 0) continue;
            Multidegree mi = m;
            --mi[i];
            sub[i] = block(mi);
            for (const auto& u : sub[i]->words) {
                Word v = u;
                v.push_back(static_cast<int>(i));
                append[i].push_back(blk->index.at(v));
            }
        }
        for (std::size_t c = 0; c < K; ++c) {
            const Word& word = blk->words[c];
            auto& out = blk->columns[c];
            for (std::size_t k = 0; k < n; ++k) {
                const auto i = static_cast<std::size_t>(word[k]);
                int64_t e = 0;
                for (std::size_t t = k + 1; t < n; ++t) e += exps_[i * theta_ + static_cast<std::size_t>(word[t])];
                e %= L_;
                Word u;
                u.reserve(n - 1);
                for (std::size_t t = 0; t < n; ++t)
                    if (t != k) u.push_back(word[t]);
                const auto& sb = *sub[i];
                const auto& col = sb.columns[sb.index.at(u)];
                for (std::size_t j = 0; j < sb.words.size(); ++j) {
                    const std::size_t target = append[i][j] * Lz;
                    for (std::size_t r = 0; r < Lz; ++r) {
                        const int64_t v = col[j * Lz + r];
                        if (v != 0) out[target + (r + static_cast<std::size_t>(e)) % Lz] += v;
                    }
                }
            }
        }
        return blk;
    }

    std::size_t theta_;
    int64_t L_;
    std::vector<int64_t> exps_;
    std::mutex guard_;
    std::map<Multidegree, std::shared_ptr<const Block>> cache_;
    mutable std::once_flag modular_once_;
    mutable std::unique_ptr<detail::ModularField> modular_;
};

/// All multidegrees of total degree n over theta letters, lexicographically decreasing.
inline std::vector<Multidegree> multidegrees(std::size_t theta, int n) {
    std::vector<Multidegree> out;
    Multidegree m(theta, 0);
    auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
        if (pos + 1 == theta) {
            m[pos] = left;
            out.push_back(m);
            return;
        }
        for (int k = left; k >= 0; --k) {
            m[pos] = k;
            self(self, pos + 1, left - k);
        }
    };
    if (theta == 0) {
        if (n == 0) out.push_back(m);
        return out;
    }
    rec(rec, 0, n);
    return out;
}

/// theta^n, saturating.
inline int64_t tensor_space_size(std::size_t theta, std::size_t n) {
    __int128 s = 1;
    for (std::size_t k = 0; k < n; ++k) {
        s *= static_cast<__int128>(theta);
        if (s > INT64_MAX) return INT64_MAX;
    }
    return static_cast<int64_t>(s);
}

/// S_n as multidegree blocks.
inline std::vector<SymmetrizerBlock> quantum_symmetrizer(const BraidingMatrix& b, std::size_t n, const ExecutionOptions& opt = {}) {
    if (tensor_space_size(b.size(), n) > opt.budget)
        throw BudgetExceeded("theta^n = " + std::to_string(b.size()) + "^" + std::to_string(n) + " exceeds budget " + std::to_string(opt.budget));
    SymmetrizerEngine engine(b);
    const auto degs = multidegrees(b.size(), static_cast<int>(n));
    std::vector<SymmetrizerBlock> out(degs.size());
    parallel_for(degs.size(), opt.threads, [&](std::size_t k) { out[k] = engine.matrix(*engine.block(degs[k])); });
    return out;
}

struct GradedDims {
    std::vector<int64_t> dims;  ///< d_0, ..., d_top with trailing zeros removed
    int64_t total = 0;
    bool truncated = false;  ///< true when vanishing beyond dims.size() - 1 was not established
    std::string stop_reason;  ///< why a truncated computation stopped before n_max; empty otherwise

    bool palindromic() const {
        return std::equal(dims.begin(), dims.begin() + static_cast<std::ptrdiff_t>(dims.size() / 2), dims.rbegin());
    }
};

/**
 * d_n = rank S_n for n = 0, 1, ... until d_n = 0 (then all higher degrees vanish since the
 * algebra is generated in degree one), n_max is passed, or theta^n or a block exceeds the
 * budget; in the last two cases the result is flagged truncated.
 */
inline GradedDims nichols_dims(const BraidingMatrix& b, std::size_t n_max, const ExecutionOptions& opt = {}) {
    GradedDims out;
    out.dims.push_back(1);
    out.total = 1;
    SymmetrizerEngine engine(b);
    out.truncated = true;
    for (std::size_t n = 1; n <= n_max; ++n) {
        if (tensor_space_size(b.size(), n) > opt.budget) {
            out.stop_reason = "theta^" + std::to_string(n) + " exceeds the budget " + std::to_string(opt.budget);
            break;
        }
        if (n > SymmetrizerEngine::kMaxDegree) {
            out.stop_reason = "degree " + std::to_string(n) + " exceeds " + std::to_string(SymmetrizerEngine::kMaxDegree);
            break;
        }
        const auto degs = multidegrees(b.size(), static_cast<int>(n));
        std::vector<std::size_t> ranks(degs.size(), 0);
        try {
            parallel_for(degs.size(), opt.threads, [&](std::size_t k) { ranks[k] = engine.rank(*engine.block(degs[k])); });
        } catch (const BudgetExceeded& e) {
            out.stop_reason = "degree " + std::to_string(n) + ": " + e.what();
            break;
        }
        engine.evict_below(static_cast<int>(n));
        const auto d = static_cast<int64_t>(std::accumulate(ranks.begin(), ranks.end(), std::size_t{0}));
        if (d == 0) {
            out.truncated = false;
            break;
        }
        out.dims.push_back(d);
        out.total += d;
    }
    if (b.size() == 0) out.truncated = false;
    return out;
}

namespace detail {

/// S_n on a sparse vector of degree-n words via S_n = (S_{n-1} (x) id) T_n, without blocks.
inline std::map<Word, CycloNum> symmetrize_sparse(const std::map<Word, CycloNum>& v, std::size_t n, const BraidingMatrix& b, int64_t L) {
    if (n <= 1) return v;
    std::map<int, std::map<Word, CycloNum>> by_last;
    for (const auto& [w, c] : v)
        for (std::size_t k = 0; k < n; ++k) {
            RootOfUnity r(1, 0);
            for (std::size_t t = k + 1; t < n; ++t) r = r * b(static_cast<std::size_t>(w[k]), static_cast<std::size_t>(w[t]));
            Word u;
            u.reserve(n - 1);
            for (std::size_t t = 0; t < n; ++t)
                if (t != k) u.push_back(w[t]);
            auto& slot = by_last[w[k]];
            const CycloNum x = c * embed_root(r, L);
            auto [it, fresh] = slot.emplace(std::move(u), x);
            if (!fresh) it->second = it->second + x;
        }
    std::map<Word, CycloNum> out;
    for (auto& [i, part] : by_last) {
        std::erase_if(part, [](const auto& kv) { return kv.second.is_zero(); });
        for (auto& [u, c] : symmetrize_sparse(part, n - 1, b, L)) {
            Word w = u;
            w.push_back(i);
            out.emplace(std::move(w), std::move(c));
        }
    }
    return out;
}

}  // namespace detail

/// S_n(e) for e homogeneous of degree n, computed without dense blocks.
inline TensorElem apply_symmetrizer(const TensorElem& e, const BraidingMatrix& b) {
    const int64_t L = std::lcm(e.conductor(), braiding_conductor(b));
    TensorElem out(L);
    if (e.is_zero()) return out;
    const std::size_t n = e.degree();
    std::map<Word, CycloNum> v;
    for (const auto& [w, c] : e.terms()) {
        detail::require(w.size() == n, ErrorKind::Malformed, "symmetrizer needs a homogeneous element");
        v.emplace(w, c.lift(std::lcm(L, c.conductor())));
    }
    for (const auto& [w, c] : detail::symmetrize_sparse(v, n, b, L)) out.add(w, c);
    return out;
}

/// True iff S_n(e) = 0 for homogeneous e of degree n.
inline bool vanishes_in_nichols(const TensorElem& e, const BraidingMatrix& b, const ExecutionOptions& opt = {}) {
    if (e.is_zero()) return true;
    const std::size_t n = e.degree();
    if (tensor_space_size(b.size(), n) > opt.budget)
        throw BudgetExceeded("theta^n = " + std::to_string(b.size()) + "^" + std::to_string(n) + " exceeds budget " + std::to_string(opt.budget));
    return apply_symmetrizer(e, b).is_zero();
}

/// Sum over positive roots of (N_{I(alpha)} - 1) ht(alpha).
inline int64_t top_pbw_degree(const RootSystemData& rs, const std::vector<int64_t>& N) {
    int64_t top = 0;
    for (const auto& r : rs.positive_roots) top += (N.at(rs.component_of(r)) - 1) * height(r);
    return top;
}

/// Coefficients of prod_alpha (1 - t^{N ht}) / (1 - t^{ht}) up to t_max.
inline GradedDims pbw_hilbert_series(const RootSystemData& rs, const std::vector<int64_t>& N, int64_t t_max) {
    const int64_t top = top_pbw_degree(rs, N);
    std::vector<int64_t> poly{1};
    for (const auto& r : rs.positive_roots) {
        const int64_t h = height(r), n = N.at(rs.component_of(r));
        std::vector<int64_t> next(poly.size() + static_cast<std::size_t>((n - 1) * h), 0);
        for (std::size_t k = 0; k < poly.size(); ++k)
            for (int64_t j = 0; j < n; ++j) next[k + static_cast<std::size_t>(j * h)] += poly[k];
        poly = std::move(next);
    }
    GradedDims out;
    out.truncated = t_max < top;
    for (int64_t k = 0; k <= std::min(t_max, top); ++k) {
        out.dims.push_back(poly[static_cast<std::size_t>(k)]);
        out.total += poly[static_cast<std::size_t>(k)];
    }
    return out;
}

}  // namespace pointed
