#include <gtest/gtest.h>

#include <random>

#include "pointed/nichols.hpp"

using namespace pointed;

namespace {

RootOfUnity z(int64_t L, int64_t k) { return RootOfUnity(L, k); }

BraidingMatrix fl(const DynkinType& t, int64_t N) {
    const auto a = cartan_matrix(t);
    return fl_braiding(z(N, 1), classify(a).components[0].symmetrizer, a);
}

// Reference symmetrizer: sum over all n! permutations, each realized by the reduced word that
// bubble sort records for it.
TensorElem symmetrizer_by_permutations(const BraidingMatrix& b, const TensorElem& t, std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    TensorElem sum(t.conductor());
    do {
        std::vector<std::size_t> q = p;
        std::vector<std::size_t> swaps;
        for (std::size_t pass = 0; pass < n; ++pass)
            for (std::size_t k = 0; k + 1 < n; ++k)
                if (q[k] > q[k + 1]) {
                    std::swap(q[k], q[k + 1]);
                    swaps.push_back(k);
                }
        TensorElem term = t;
        for (auto k : swaps) term = braid_operator(b, k, term);
        sum = sum + term;
    } while (std::next_permutation(p.begin(), p.end()));
    return sum;
}

BraidingMatrix random_braiding(std::mt19937& rng, std::size_t theta, int64_t L) {
    std::uniform_int_distribution<int64_t> e(0, L - 1);
    BraidingMatrix b(theta);
    for (auto i = 0u; i < theta; ++i)
        for (auto j = 0u; j < theta; ++j) b(i, j) = z(L, e(rng));
    return b;
}

// chi_y(g_i) for a homogeneous word-space element y, read off the braiding
CycloNum char_value(const BraidingMatrix& b, int i, const Word& y, int64_t L) {
    RootOfUnity r;
    for (int j : y) r = r * b(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    return embed_root(r, L);
}

// [x_i, y]_c = x_i y - chi_y(g_i) y x_i for y of a single multidegree
TensorElem ad_letter(const BraidingMatrix& b, int i, const TensorElem& y) {
    const int64_t L = y.conductor();
    const auto xi = TensorElem::letter(L, i);
    const auto c = char_value(b, i, y.terms().begin()->first, L);
    return xi * y - c * (y * xi);
}

// [u, v]_c for homogeneous u, v: uv - chi_v(g_u) vu
TensorElem bracket(const BraidingMatrix& b, const TensorElem& u, const TensorElem& v) {
    const int64_t L = u.conductor();
    RootOfUnity r;
    for (int i : u.terms().begin()->first)
        for (int j : v.terms().begin()->first) r = r * b(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    return u * v - embed_root(r, L) * (v * u);
}

TensorElem power(const TensorElem& x, int n) {
    TensorElem r = TensorElem::word(x.conductor(), {}, CycloNum::one(x.conductor()));
    for (int k = 0; k < n; ++k) r = r * x;
    return r;
}

}  // namespace

TEST(BraidOperator, Examples) {
    const BraidingMatrix b{{z(5, 1), z(5, 2)}, {z(5, 3), z(5, 4)}};
    const int64_t L = 5;
    EXPECT_EQ(braid_operator(b, 0, TensorElem::word(L, {0, 1}, CycloNum::one(L))),
              TensorElem::word(L, {1, 0}, CycloNum::root_power(L, 2)));
    EXPECT_EQ(braid_operator(b, 0, TensorElem::word(L, {0, 0}, CycloNum::one(L))),
              TensorElem::word(L, {0, 0}, CycloNum::root_power(L, 1)));
    EXPECT_THROW(braid_operator(b, 1, TensorElem::word(L, {0, 1}, CycloNum::one(L))), Error);
}

TEST(BraidOperator, BraidRelationOnAllWordsOfLengthThree) {
    std::mt19937 rng(2);
    for (int t = 0; t < 5; ++t) {
        const auto b = random_braiding(rng, 2, 7);
        for (int w = 0; w < 8; ++w) {
            const auto x = TensorElem::word(7, {w & 1, (w >> 1) & 1, (w >> 2) & 1}, CycloNum::one(7));
            EXPECT_EQ(braid_operator(b, 0, braid_operator(b, 1, braid_operator(b, 0, x))),
                      braid_operator(b, 1, braid_operator(b, 0, braid_operator(b, 1, x))));
        }
    }
}

TEST(QuantumSymmetrizer, SmallCases) {
    const BraidingMatrix b{{z(3, 1)}};
    const auto s1 = quantum_symmetrizer(b, 1);
    ASSERT_EQ(s1.size(), 1u);
    EXPECT_EQ(s1[0].matrix.at(0, 0), CycloNum::one(3));
    const auto s2 = quantum_symmetrizer(b, 2);
    EXPECT_EQ(s2[0].matrix.at(0, 0), CycloNum::one(3) + CycloNum::root_power(3, 1));
    const auto s3 = quantum_symmetrizer(b, 3);
    EXPECT_TRUE(s3[0].matrix.at(0, 0).is_zero());
    // theta = 1, b = q: S_3 = (1 + q)(1 + q + q^2) for generic q
    const BraidingMatrix b7{{z(7, 1)}};
    const auto q = CycloNum::root_power(7, 1), one = CycloNum::one(7);
    EXPECT_EQ(quantum_symmetrizer(b7, 3)[0].matrix.at(0, 0), (one + q) * (one + q + q * q));
}

TEST(QuantumSymmetrizer, MatchesPermutationSum) {
    std::mt19937 rng(8);
    for (std::size_t theta : {1u, 2u, 3u}) {
        for (int trial = 0; trial < 3; ++trial) {
            const int64_t L = trial == 0 ? 3 : (trial == 1 ? 5 : 12);
            const auto b = random_braiding(rng, theta, L);
            SymmetrizerEngine engine(b);
            for (std::size_t n = 1; n <= (theta == 3 ? 4u : 5u); ++n) {
                for (const auto& m : multidegrees(theta, static_cast<int>(n))) {
                    const auto blk = engine.block(m);
                    for (const auto& w : blk->words) {
                        const auto x = TensorElem::word(L, w, CycloNum::one(L));
                        const auto expect = symmetrizer_by_permutations(b, x, n);
                        EXPECT_EQ(engine.apply(x), expect);
                        EXPECT_EQ(apply_symmetrizer(x, b), expect);
                    }
                }
            }
        }
    }
}

TEST(QuantumSymmetrizer, BlockRankEqualsTransposeRank) {
    const auto blocks = quantum_symmetrizer(fl({'A', 2}, 3), 4);
    for (const auto& blk : blocks) EXPECT_EQ(rank(blk.matrix), rank(blk.matrix.transpose()));
}

TEST(QuantumSymmetrizer, Budget) {
    EXPECT_THROW(quantum_symmetrizer(fl({'A', 2}, 3), 17), BudgetExceeded);
    ExecutionOptions small;
    small.budget = 8;
    EXPECT_THROW(quantum_symmetrizer(fl({'A', 2}, 3), 4, small), BudgetExceeded);
}

TEST(NicholsDims, RankOneTruncatedPolynomials) {
    for (int64_t N : {2, 3, 5, 7}) {
        const auto d = nichols_dims(BraidingMatrix{{z(N, 1)}}, 20);
        EXPECT_FALSE(d.truncated);
        EXPECT_EQ(d.dims, std::vector<int64_t>(static_cast<std::size_t>(N), 1)) << N;
        EXPECT_EQ(d.total, N);
    }
}

TEST(NicholsDims, A2AtCubeRootOfUnity) {
    const auto d = nichols_dims(fl({'A', 2}, 3), 20);
    EXPECT_FALSE(d.truncated);
    EXPECT_EQ(d.dims, (std::vector<int64_t>{1, 2, 4, 4, 5, 4, 4, 2, 1}));
    EXPECT_EQ(d.total, 27);
    EXPECT_TRUE(d.palindromic());
}

TEST(NicholsDims, DisjointComponentsMultiply) {
    // b_12 b_21 = 1 but b_12 != 1
    const BraidingMatrix b{{z(3, 1), z(3, 1)}, {z(3, 2), z(3, 1)}};
    const auto d = nichols_dims(b, 20);
    EXPECT_EQ(d.total, 9);
    EXPECT_EQ(d.dims, (std::vector<int64_t>{1, 2, 3, 2, 1}));
    const BraidingMatrix c{{z(3, 1), z(1, 0)}, {z(1, 0), z(5, 2)}};
    EXPECT_EQ(nichols_dims(c, 20).total, 15);
}

TEST(NicholsDims, TruncationAndThreads) {
    ExecutionOptions opt;
    opt.budget = 64;
    const auto d = nichols_dims(fl({'A', 2}, 3), 20, opt);
    EXPECT_TRUE(d.truncated);
    EXPECT_EQ(d.dims, (std::vector<int64_t>{1, 2, 4, 4, 5, 4, 4}));
    opt.budget = 1024;
    const auto one = nichols_dims(fl({'B', 2}, 3), 20, opt);
    opt.threads = 4;
    const auto four = nichols_dims(fl({'B', 2}, 3), 20, opt);
    EXPECT_EQ(one.dims, four.dims);
    EXPECT_EQ(one.dims.size(), 11u);
}

TEST(PbwHilbertSeries, Examples) {
    const auto a1 = build_root_system({{2}});
    EXPECT_EQ(pbw_hilbert_series(a1, {3}, 100).dims, (std::vector<int64_t>{1, 1, 1}));
    const auto a2 = build_root_system({{2, -1}, {-1, 2}});
    const auto s = pbw_hilbert_series(a2, {3}, 100);
    EXPECT_EQ(s.dims, (std::vector<int64_t>{1, 2, 4, 4, 5, 4, 4, 2, 1}));
    EXPECT_EQ(s.total, 27);
    EXPECT_FALSE(s.truncated);
    EXPECT_TRUE(pbw_hilbert_series(a2, {3}, 4).truncated);
    const auto g2 = build_root_system(cartan_matrix({'G', 2}));
    EXPECT_EQ(pbw_hilbert_series(g2, {5}, 1000).total, 5 * 5 * 5 * 5 * 5 * 5);
}

TEST(NicholsVersusPbw, SmallFiniteTypes) {
    struct Case {
        DynkinType t;
        int64_t N;
        int64_t budget;
    };
    for (const auto& c : {Case{{'A', 1}, 5, 64}, Case{{'A', 2}, 3, 1024}, Case{{'A', 2}, 5, 2048}, Case{{'B', 2}, 3, 1024},
                          Case{{'A', 3}, 3, 2187}}) {
        const auto b = fl(c.t, c.N);
        const auto rs = build_root_system(cartan_matrix(c.t));
        const auto pbw = pbw_hilbert_series(rs, {c.N}, 1000);
        ExecutionOptions opt;
        opt.budget = c.budget;
        opt.threads = 0;
        const auto d = nichols_dims(b, 1000, opt);
        const std::size_t k = std::min(d.dims.size(), pbw.dims.size());
        for (std::size_t n = 0; n < k; ++n) EXPECT_EQ(d.dims[n], pbw.dims[n]) << c.t.label() << " N=" << c.N << " n=" << n;
        if (!d.truncated) {
            EXPECT_EQ(d.total, pbw.total);
        }
    }
}

TEST(VanishesInNichols, SerreAndRootVectorPowersForA2) {
    const auto b = fl({'A', 2}, 3);
    const int64_t L = 3;
    const auto x1 = TensorElem::letter(L, 0), x2 = TensorElem::letter(L, 1);
    EXPECT_TRUE(vanishes_in_nichols(ad_letter(b, 0, ad_letter(b, 0, x2)), b));
    EXPECT_TRUE(vanishes_in_nichols(ad_letter(b, 1, ad_letter(b, 1, x1)), b));
    EXPECT_FALSE(vanishes_in_nichols(ad_letter(b, 0, x2), b));
    EXPECT_FALSE(vanishes_in_nichols(x1, b));
    const auto x12 = bracket(b, x1, x2);
    EXPECT_TRUE(vanishes_in_nichols(power(x12, 3), b));
    EXPECT_FALSE(vanishes_in_nichols(power(x12, 2), b));
}

TEST(VanishesInNichols, PowersOfASingleGenerator) {
    for (int64_t N : {3, 5, 7}) {
        const BraidingMatrix b{{z(N, 1)}};
        const auto x = TensorElem::letter(N, 0);
        EXPECT_TRUE(vanishes_in_nichols(power(x, static_cast<int>(N)), b));
        EXPECT_FALSE(vanishes_in_nichols(power(x, static_cast<int>(N - 1)), b));
    }
}
