#include <gtest/gtest.h>

#include <random>

#include "pointed/braiding.hpp"

using namespace pointed;

namespace {

RootOfUnity z(int64_t L, int64_t k) { return RootOfUnity(L, k); }

BraidingMatrix random_bicharacter(std::mt19937& rng, std::size_t n, int64_t L) {
    std::uniform_int_distribution<int64_t> e(0, L - 1);
    BraidingMatrix w(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w(i, j) = z(L, e(rng));
    return w;
}

}  // namespace

TEST(BraidingFromData, PairsCharactersWithElements) {
    const AbelianGroup g({3});
    const auto b = braiding_from_data({g.element({1})}, {g.character({1})});
    EXPECT_EQ(b(0, 0), z(3, 1));

    // FL datum: Gamma = (Z/3)^2, g_i = e_i, chi_j = column j of d_i a_ij
    const AbelianGroup g2({3, 3});
    const auto fl = braiding_from_data({g2.element({1, 0}), g2.element({0, 1})}, {g2.character({2, -1}), g2.character({-1, 2})});
    const BraidingMatrix expect{{z(3, 2), z(3, -1)}, {z(3, -1), z(3, 2)}};
    EXPECT_EQ(fl, expect);
}

TEST(DetectCartan, Examples) {
    const BraidingMatrix a2{{z(3, 2), z(3, 2)}, {z(3, 2), z(3, 2)}};
    const auto r = detect_cartan(a2);
    ASSERT_TRUE(r.is_cartan);
    EXPECT_EQ(r.cartan, (IntMatrix{{2, -1}, {-1, 2}}));

    const BraidingMatrix bad{{z(5, 0), z(5, 1)}, {z(5, 2), z(5, 3)}};
    const auto f = detect_cartan(bad);
    EXPECT_FALSE(f.is_cartan);
    EXPECT_EQ(f.witness, (std::pair<int, int>{0, 0}));

    EXPECT_EQ(detect_cartan(BraidingMatrix{{z(5, 1)}}).cartan, IntMatrix{{2}});
}

TEST(DetectCartan, NoAdmissibleExponent) {
    // b_11 = -1 generates only +-1, b_12 b_21 = zeta_3 is not a power of it
    const BraidingMatrix b{{z(2, 1), z(3, 1)}, {z(1, 0), z(5, 1)}};
    const auto r = detect_cartan(b);
    EXPECT_FALSE(r.is_cartan);
    EXPECT_EQ(r.witness, (std::pair<int, int>{0, 1}));
}

TEST(DetectCartan, RecoversFLMatricesForAllSmallTypes) {
    for (const DynkinType t : {DynkinType{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'B', 3}, {'C', 3}, {'G', 2}, {'D', 4}, {'F', 4}}) {
        const auto a = cartan_matrix(t);
        const auto d = classify(a).components[0].symmetrizer;
        for (int64_t N : {5, 7, 11, 13}) {
            const auto b = fl_braiding(z(N, 1), d, a);
            const auto r = detect_cartan(b);
            ASSERT_TRUE(r.is_cartan) << t.label();
            EXPECT_EQ(r.cartan, a) << t.label() << " N=" << N;
            for (std::size_t i = 0; i < a.size(); ++i)
                for (std::size_t j = 0; j < a.size(); ++j) {
                    EXPECT_EQ(b(i, j) * b(j, i), b(i, i).pow(a(i, j)));
                    EXPECT_EQ(b(i, j) * b(j, i), b(j, j).pow(a(j, i)));
                }
        }
    }
}

TEST(ComponentsOf, Blocks) {
    const auto q = z(3, 1);
    const BraidingMatrix a2{{q.pow(2), q.pow(-1), z(1, 0)}, {q.pow(-1), q.pow(2), z(1, 0)}, {z(1, 0), z(1, 0), z(5, 1)}};
    const auto r = detect_cartan(a2);
    const auto cs = components_of(r, a2);
    EXPECT_EQ(cs.components, (std::vector<std::vector<int>>{{0, 1}, {2}}));
    EXPECT_EQ(cs.N, (std::vector<int64_t>{3, 5}));
    EXPECT_TRUE(cs.joined(0, 1));
    EXPECT_FALSE(cs.joined(1, 2));

    const BraidingMatrix a11{{z(3, 1), z(1, 0)}, {z(1, 0), z(3, 1)}};
    EXPECT_EQ(components_of(detect_cartan(a11), a11).components.size(), 2u);
}

TEST(ComponentsOf, InconsistentOrders) {
    const BraidingMatrix b{{z(3, 1), z(3, 2)}, {z(1, 0), z(6, 1)}};
    // b_11 = zeta_3 and b_22 = zeta_6 give a_12 = -1, a_21 = -2 (type B_2) with N_1 = 3, N_2 = 6
    const auto r = detect_cartan(b);
    ASSERT_TRUE(r.is_cartan);
    ASSERT_TRUE(is_finite_type(r.cartan));
    try {
        components_of(r, b);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InconsistentDatum);
    }
}

TEST(TwistBraiding, Properties) {
    std::mt19937 rng(9);
    const auto a = cartan_matrix({'B', 3});
    const auto b = fl_braiding(z(7, 1), classify(a).components[0].symmetrizer, a);
    EXPECT_EQ(twist_braiding(b, BraidingMatrix(3, RootOfUnity::one())), b);
    for (int t = 0; t < 20; ++t) {
        const auto w = random_bicharacter(rng, 3, 7);
        const auto bf = twist_braiding(b, w);
        for (std::size_t i = 0; i < 3; ++i) {
            EXPECT_EQ(bf(i, i), b(i, i));
            for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(bf(i, j) * bf(j, i), b(i, j) * b(j, i));
        }
        EXPECT_EQ(detect_cartan(bf).cartan, a);
    }
}

TEST(Symmetrize, Examples) {
    const auto q = z(9, 1);
    const BraidingMatrix b{{q.pow(2), q}, {q.pow(3), q.pow(2)}};
    const auto s = symmetrize(b);
    EXPECT_EQ(s.braiding(0, 1), q.pow(2));
    EXPECT_EQ(s.braiding(1, 0), q.pow(2));
    EXPECT_EQ(twist_braiding(b, s.omega), s.braiding);

    const BraidingMatrix sym{{z(3, 2), z(3, 2)}, {z(3, 2), z(3, 2)}};
    const auto t = symmetrize(sym);
    EXPECT_EQ(t.braiding, sym);
    for (const auto& w : t.omega.entries()) EXPECT_TRUE(w.is_one());
}

TEST(Symmetrize, RejectsEvenOrders) {
    try {
        symmetrize(BraidingMatrix{{z(4, 1)}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Unsupported);
    }
}

TEST(Symmetrize, RandomTwistsOfFLBraidings) {
    std::mt19937 rng(4);
    const auto a = cartan_matrix({'G', 2});
    const auto b = fl_braiding(z(7, 3), {1, 3}, a);
    for (int t = 0; t < 20; ++t) {
        const auto twisted = twist_braiding(b, random_bicharacter(rng, 2, 7));
        const auto s = symmetrize(twisted);
        EXPECT_TRUE(is_symmetric(s.braiding));
        EXPECT_EQ(s.braiding, b);
        EXPECT_EQ(detect_cartan(s.braiding).cartan, detect_cartan(twisted).cartan);
    }
}

TEST(FLNormalForm, Examples) {
    const auto q = z(3, 1);
    const BraidingMatrix a2{{q.pow(2), q.pow(-1)}, {q.pow(-1), q.pow(2)}};
    const auto f = fl_normal_form(a2, {{2, -1}, {-1, 2}}, {0, 1});
    ASSERT_TRUE(f.is_fl);
    EXPECT_EQ(f.q, q);
    EXPECT_EQ(f.d, (std::vector<int>{1, 1}));

    const IntMatrix b2{{2, -1}, {-2, 2}};
    const auto q5 = z(5, 2);
    const auto fb = fl_normal_form(fl_braiding(q5, {2, 1}, b2), b2, {0, 1});
    ASSERT_TRUE(fb.is_fl);
    EXPECT_EQ(fb.q, q5);
    EXPECT_EQ(fb.d, (std::vector<int>{2, 1}));
}

TEST(FLNormalForm, ComponentsAreIndependent) {
    const BraidingMatrix b{{z(5, 1), z(1, 0)}, {z(1, 0), z(7, 3)}};
    const IntMatrix a{{2, 0}, {0, 2}};
    const auto f1 = fl_normal_form(b, a, {0});
    const auto f2 = fl_normal_form(b, a, {1});
    ASSERT_TRUE(f1.is_fl && f2.is_fl);
    EXPECT_EQ(f1.q.pow(2), z(5, 1));
    EXPECT_EQ(f2.q.pow(2), z(7, 3));
    EXPECT_NE(f1.q, f2.q);
}

TEST(FLNormalForm, NonSymmetricIsNotFL) {
    const auto q = z(9, 1);
    const BraidingMatrix b{{q.pow(2), q}, {q.pow(3), q.pow(2)}};
    EXPECT_FALSE(fl_normal_form(b, {{2, -1}, {-1, 2}}, {0, 1}).is_fl);
}
