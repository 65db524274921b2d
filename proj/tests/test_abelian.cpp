#include <gtest/gtest.h>

#include <random>

#include "pointed/abelian.hpp"

using namespace pointed;

TEST(Pair, Examples) {
    const AbelianGroup g33({3, 3});
    EXPECT_TRUE(pair(g33.character({0, 1}), g33.element({1, 0})).is_one());
    const AbelianGroup z3({3});
    EXPECT_EQ(pair(z3.character({1}), z3.element({1})), RootOfUnity(3, 1));
    EXPECT_TRUE(pair(g33.character({1, 2}), g33.element({2, 2})).is_one());
}

TEST(Pair, MixedOrders) {
    const AbelianGroup g({4, 6});
    // (1,1) paired with (1,1): zeta_4 * zeta_6 = zeta_12^{3+2}
    EXPECT_EQ(pair(g.character({1, 1}), g.element({1, 1})), RootOfUnity(12, 5));
}

TEST(Pair, GroupMismatch) {
    try {
        pair(AbelianGroup({3}).character({1}), AbelianGroup({5}).element({1}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::GroupMismatch);
    }
}

TEST(Pair, NondegenerateExhaustive) {
    for (const auto& orders : std::vector<std::vector<int64_t>>{{2}, {3, 3}, {4, 6}, {5, 5}, {2, 3, 4}, {9, 3}}) {
        const AbelianGroup g(orders);
        ASSERT_LE(g.order(), 200);
        const auto chars = g.enumerate_characters();
        for (const auto& x : g.enumerate_elements()) {
            if (x.is_identity()) continue;
            bool detected = false;
            for (const auto& c : chars) detected = detected || !pair(c, x).is_one();
            EXPECT_TRUE(detected) << x.to_string();
        }
    }
}

TEST(Pair, BilinearOnRandomTriples) {
    std::mt19937 rng(5);
    const AbelianGroup g({4, 9, 5});
    const auto els = g.enumerate_elements();
    const auto chars = g.enumerate_characters();
    std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
    for (int t = 0; t < 200; ++t) {
        const auto &x = els[pick(rng)], &y = els[pick(rng)];
        const auto &c = chars[pick(rng)], &d = chars[pick(rng)];
        EXPECT_EQ(pair(c, x * y), pair(c, x) * pair(c, y));
        EXPECT_EQ(pair(c * d, x), pair(c, x) * pair(d, x));
    }
}

TEST(ElementOrder, Examples) {
    EXPECT_EQ(element_order(AbelianGroup({3, 3}).identity()), 1);
    EXPECT_EQ(element_order(AbelianGroup({3, 3}).element({1, 0})), 3);
    EXPECT_EQ(element_order(AbelianGroup({4, 9}).element({2, 3})), 6);
}

TEST(ElementOrder, DividesExponent) {
    const AbelianGroup g({4, 6, 10});
    for (const auto& x : g.enumerate_elements()) {
        EXPECT_EQ(g.exponent() % element_order(x), 0);
        EXPECT_TRUE(x.pow(element_order(x)).is_identity());
    }
}

TEST(Enumerate, LexicographicOrder) {
    const auto z2 = AbelianGroup({2}).enumerate_elements();
    ASSERT_EQ(z2.size(), 2u);
    EXPECT_EQ(z2[0].exponents(), std::vector<int64_t>{0});
    EXPECT_EQ(z2[1].exponents(), std::vector<int64_t>{1});
    EXPECT_EQ(AbelianGroup({3}).enumerate_elements().size(), 3u);
    const auto g = AbelianGroup({3, 3}).enumerate_elements();
    ASSERT_EQ(g.size(), 9u);
    EXPECT_EQ(g.front().exponents(), (std::vector<int64_t>{0, 0}));
    EXPECT_EQ(g[1].exponents(), (std::vector<int64_t>{0, 1}));
    EXPECT_EQ(g.back().exponents(), (std::vector<int64_t>{2, 2}));
    EXPECT_TRUE(std::is_sorted(g.begin(), g.end()));
}

TEST(Enumerate, TrivialGroupHasOneElement) { EXPECT_EQ(AbelianGroup(std::vector<int64_t>{}).enumerate_elements().size(), 1u); }

TEST(Enumerate, Budget) {
    EXPECT_THROW(AbelianGroup::elementary(3, 4).enumerate_elements(80), BudgetExceeded);
    EXPECT_EQ(AbelianGroup::elementary(3, 4).enumerate_elements(81).size(), 81u);
}

TEST(Group, RejectsSmallOrders) { EXPECT_THROW(AbelianGroup({3, 1}), Error); }

TEST(ExponentVector, ReductionAndLengthCheck) {
    const AbelianGroup g({3, 5});
    EXPECT_EQ(g.element({-1, 7}).exponents(), (std::vector<int64_t>{2, 2}));
    try {
        g.element({1});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::LengthMismatch);
    }
    EXPECT_THROW(g.element({1, 0}) * AbelianGroup({3, 3}).element({1, 0}), Error);
}
