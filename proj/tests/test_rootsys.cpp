#include <gtest/gtest.h>

#include <random>
#include <set>

#include "pointed/rootsys.hpp"

using namespace pointed;

namespace {

// Independent route to Phi^+: the Weyl orbit of the simple roots, keeping positive vectors.
std::set<Root> orbit_positive_roots(const IntMatrix& a) {
    const std::size_t n = a.size();
    std::set<Root> seen;
    std::vector<Root> todo;
    for (std::size_t i = 0; i < n; ++i) {
        Root r(n, 0);
        r[i] = 1;
        todo.push_back(r);
        seen.insert(r);
    }
    while (!todo.empty()) {
        Root r = todo.back();
        todo.pop_back();
        for (std::size_t i = 0; i < n; ++i) {
            int pairing = 0;
            for (std::size_t j = 0; j < n; ++j) pairing += r[j] * a(i, j);
            Root s = r;
            s[i] -= pairing;
            if (seen.insert(s).second) todo.push_back(s);
        }
    }
    std::set<Root> pos;
    for (const auto& r : seen)
        if (is_positive(r)) pos.insert(r);
    return pos;
}

IntMatrix permuted(const IntMatrix& a, const std::vector<int>& perm) {
    IntMatrix b(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) b(static_cast<std::size_t>(perm[i]), static_cast<std::size_t>(perm[j])) = a(i, j);
    return b;
}

const std::vector<DynkinType> kTypes = {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3}, {'B', 4}, {'C', 3}, {'C', 4},
                                        {'D', 4}, {'D', 5}, {'E', 6}, {'E', 7}, {'E', 8}, {'F', 4}, {'G', 2}};

}  // namespace

TEST(Classify, Examples) {
    EXPECT_EQ(classify({{2, -1}, {-1, 2}}).type_label(), "A_2");
    const auto b2 = classify({{2, -2}, {-1, 2}});
    ASSERT_TRUE(b2.finite);
    EXPECT_EQ(b2.components[0].type.family, 'B');
    EXPECT_EQ(b2.components[0].type.rank, 2);
    const auto aff = classify({{2, -2}, {-2, 2}});
    EXPECT_FALSE(aff.finite);
    ASSERT_TRUE(aff.offending.has_value());
    EXPECT_EQ(*aff.offending, 0u);
}

TEST(Classify, MalformedMatrices) {
    for (const IntMatrix& a : {IntMatrix{{2, 1}, {-1, 2}}, IntMatrix{{2, -1}, {0, 2}}, IntMatrix{{1, 0}, {0, 2}}}) {
        try {
            classify(a);
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::Malformed);
        }
    }
}

TEST(Classify, NonFiniteComponentIsReported) {
    // A_1 followed by the affine A_2^(1) triangle
    IntMatrix a{{2, 0, 0, 0}, {0, 2, -1, -1}, {0, -1, 2, -1}, {0, -1, -1, 2}};
    const auto c = classify(a);
    EXPECT_FALSE(c.finite);
    EXPECT_EQ(*c.offending, 1u);
    EXPECT_EQ(c.components[1].vertices, (std::vector<int>{1, 2, 3}));
    EXPECT_FALSE(is_finite_type({{2, -3}, {-2, 2}}));
}

TEST(Classify, RoundTripsAllTypesUnderRelabeling) {
    std::mt19937 rng(1);
    for (const auto& t : kTypes) {
        const IntMatrix a = cartan_matrix(t);
        std::vector<int> perm(a.size());
        std::iota(perm.begin(), perm.end(), 0);
        for (int trial = 0; trial < 4; ++trial) {
            const IntMatrix b = permuted(a, perm);
            const auto c = classify(b);
            ASSERT_TRUE(c.finite) << t.label();
            ASSERT_EQ(c.components.size(), 1u);
            EXPECT_EQ(c.components[0].type, t) << t.label();
            // the labeling must be a graph isomorphism onto the Bourbaki diagram
            const auto& lab = c.components[0].labeling;
            ASSERT_EQ(lab.size(), a.size());
            for (std::size_t i = 0; i < a.size(); ++i)
                for (std::size_t j = 0; j < a.size(); ++j) {
                    EXPECT_EQ(b(static_cast<std::size_t>(lab[i]), static_cast<std::size_t>(lab[j])), a(i, j)) << t.label();
                }
            std::shuffle(perm.begin(), perm.end(), rng);
        }
    }
}

TEST(PositiveRoots, Examples) {
    const auto a2 = positive_roots({{2, -1}, {-1, 2}});
    EXPECT_EQ(std::set<Root>(a2.begin(), a2.end()), (std::set<Root>{{1, 0}, {0, 1}, {1, 1}}));
    const auto b2 = positive_roots({{2, -2}, {-1, 2}});
    EXPECT_EQ(b2.size(), 4u);
    EXPECT_TRUE(std::find(b2.begin(), b2.end(), Root{2, 1}) != b2.end());
    const auto g2 = positive_roots(cartan_matrix({'G', 2}));
    EXPECT_EQ(g2.size(), 6u);
    int top = 0;
    for (const auto& r : g2) top = std::max(top, height(r));
    EXPECT_EQ(top, 5);
}

TEST(PositiveRoots, MatchWeylOrbitAndClassicalCounts) {
    for (const auto& t : kTypes) {
        const auto a = cartan_matrix(t);
        const auto roots = positive_roots(a);
        EXPECT_EQ(std::set<Root>(roots.begin(), roots.end()), orbit_positive_roots(a)) << t.label();
        EXPECT_EQ(static_cast<int>(roots.size()), t.positive_root_count()) << t.label();
    }
}

TEST(Height, Examples) {
    EXPECT_EQ(height({0, 1, 0}), 1);
    EXPECT_EQ(height({1, 1}), 2);
    EXPECT_EQ(height({3, 2}), 5);
}

TEST(LongestWord, Examples) {
    EXPECT_EQ(longest_word({{2}}), std::vector<int>{0});
    EXPECT_EQ(longest_word({{2, -1}, {-1, 2}}), (std::vector<int>{0, 1, 0}));
    EXPECT_EQ(longest_word({{2, 0}, {0, 2}}), (std::vector<int>{0, 1}));
}

TEST(LongestWord, SendsEveryPositiveRootNegative) {
    for (const auto& t : kTypes) {
        const auto a = cartan_matrix(t);
        const auto w = longest_word(a);
        EXPECT_EQ(static_cast<int>(w.size()), t.positive_root_count()) << t.label();
        for (const auto& r : positive_roots(a)) {
            Root x = r;
            for (auto it = w.rbegin(); it != w.rend(); ++it) x = reflect(a, *it, x);
            for (int c : x) EXPECT_LE(c, 0) << t.label();
        }
    }
}

TEST(ConvexOrder, Examples) {
    EXPECT_EQ(convex_order({{2, -1}, {-1, 2}}), (std::vector<Root>{{1, 0}, {1, 1}, {0, 1}}));
    EXPECT_EQ(convex_order({{2}}), std::vector<Root>{{1}});
    EXPECT_EQ(convex_order({{2, 0}, {0, 2}}), (std::vector<Root>{{1, 0}, {0, 1}}));
}

TEST(ConvexOrder, IsAPermutationOfPositiveRoots) {
    for (const auto& t : kTypes) {
        const auto a = cartan_matrix(t);
        const auto order = convex_order(a);
        const auto roots = positive_roots(a);
        EXPECT_EQ(std::set<Root>(order.begin(), order.end()), std::set<Root>(roots.begin(), roots.end())) << t.label();
        EXPECT_EQ(order.size(), roots.size());
    }
}

TEST(ConvexOrder, IsConvex) {
    // beta = gamma + delta with all three positive roots forces beta between gamma and delta
    for (const auto& t : kTypes) {
        const auto rs = build_root_system(cartan_matrix(t));
        for (const auto& g : rs.positive_roots)
            for (const auto& d : rs.positive_roots) {
                Root s = g;
                for (std::size_t k = 0; k < s.size(); ++k) s[k] += d[k];
                if (!rs.is_root(s)) continue;
                const auto pg = rs.position(g), pd = rs.position(d), ps = rs.position(s);
                EXPECT_TRUE((pg < ps && ps < pd) || (pd < ps && ps < pg)) << t.label();
            }
    }
}

TEST(RootSystem, ComponentsAndSupport) {
    // A_2 on {1,3}, A_1 on {2}, B_2 on {4,5}
    IntMatrix a{{2, 0, -1, 0, 0}, {0, 2, 0, 0, 0}, {-1, 0, 2, 0, 0}, {0, 0, 0, 2, -2}, {0, 0, 0, -1, 2}};
    const auto rs = build_root_system(a);
    ASSERT_EQ(rs.classification.components.size(), 3u);
    EXPECT_EQ(rs.classification.type_label(), "A_2 x A_1 x B_2");
    EXPECT_EQ(rs.size(), 3u + 1u + 4u);
    EXPECT_EQ(rs.component_size(0), 3u);
    EXPECT_EQ(rs.component_size(2), 4u);
    for (const auto& r : rs.positive_roots) {
        std::set<std::size_t> comps;
        for (std::size_t c = 0; c < rs.classification.components.size(); ++c)
            for (int v : rs.classification.components[c].vertices)
                if (r[static_cast<std::size_t>(v)] != 0) comps.insert(c);
        EXPECT_EQ(comps.size(), 1u);
    }
    // components appear in vertex order inside the word
    EXPECT_EQ(rs.reduced_word.front(), 0);
    EXPECT_EQ(rs.reduced_word[3], 1);
}

TEST(RootSystem, Symmetrizer) {
    const auto c = classify(cartan_matrix({'G', 2}));
    EXPECT_EQ(c.components[0].symmetrizer, (std::vector<int>{1, 3}));
    const auto b = classify(cartan_matrix({'B', 3}));
    EXPECT_EQ(b.components[0].symmetrizer, (std::vector<int>{2, 2, 1}));
}
