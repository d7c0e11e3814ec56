#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "rainbow/coloring.hpp"

using namespace rainbow;

namespace {

std::set<std::vector<int>> library_set(const Graph& g, int q)
{
    std::set<std::vector<int>> out;
    for (const auto& c : enumerate_proper_colorings(g, q).colorings)
        EXPECT_TRUE(out.insert(c.vector()).second) << "duplicate coloring";
    return out;
}

} // namespace

TEST(Coloring, C4CanonicalSet)
{
    auto got = library_set(make_cycle(4), 4);
    // edges (0,1),(0,3),(1,2),(2,3): opposite pairs are 0-3 and 1-2
    std::set<std::vector<int>> expect{{0, 1, 1, 0}, {0, 1, 2, 0}, {0, 1, 1, 2}, {0, 1, 2, 3}};
    EXPECT_EQ(got, expect);
}

TEST(Coloring, MatchesNaiveFilterOnSmallCorpus)
{
    for (const auto& [name, g] : fixtures::corpus()) {
        if (g.size() > 6)
            continue;
        for (int q : {1, 3, static_cast<int>(g.size())})
            EXPECT_EQ(library_set(g, q), oracle::colorings_by_filter(g, q)) << name << " q=" << q;
    }
}

TEST(Coloring, EnumerationIsLexicographic)
{
    auto list = enumerate_proper_colorings(make_double_star(1, 2), 4).colorings;
    for (std::size_t i = 1; i < list.size(); ++i)
        EXPECT_LT(list[i - 1].vector(), list[i].vector());
}

TEST(Coloring, BudgetIsReported)
{
    EnumerationOptions opt;
    opt.max_colors = 6;
    opt.node_budget = 10;
    auto st = for_each_proper_coloring(make_complete(5), opt, [](std::span<const Color>) { return true; });
    EXPECT_TRUE(st.budget_exhausted);
    EXPECT_FALSE(st.exhaustive());
    EXPECT_EQ(st.nodes, 10u);
}

TEST(Coloring, PrefixesPartitionTheEnumeration)
{
    auto g = make_cycle(6);
    auto all = library_set(g, 6);
    std::set<std::vector<int>> joined;
    for (const auto& pre : canonical_prefixes(g, 6, 3)) {
        EnumerationOptions opt;
        opt.max_colors = 6;
        opt.prefix = pre;
        for_each_proper_coloring(g, opt, [&](std::span<const Color> c) {
            EXPECT_TRUE(joined.emplace(c.begin(), c.end()).second);
            return true;
        });
    }
    EXPECT_EQ(joined, all);
}

TEST(Coloring, PruningSkipsSubtrees)
{
    auto g = make_path(4);
    EnumerationOptions opt;
    opt.max_colors = 4;
    std::size_t leaves = 0;
    auto st = for_each_proper_coloring(
        g, opt, [&](std::span<const Color> c) {
            EXPECT_NE(c[2], 0);
            ++leaves;
            return true;
        },
        [](std::span<const Color> partial, EdgeIndex last) { return last == 2 && partial[2] == 0; });
    EXPECT_GT(st.pruned, 0u);
    EXPECT_EQ(leaves, st.leaves);
}

TEST(Coloring, RejectsBadInput)
{
    auto g = make_path(2);
    EXPECT_THROW(EdgeColoring(g, {0, 0}), std::invalid_argument);
    EXPECT_THROW(EdgeColoring(g, {0}), std::invalid_argument);
    EXPECT_THROW(EdgeColoring(g, {0, -1}), std::invalid_argument);
    EXPECT_THROW(is_proper(g, std::vector<Color>{0}), std::invalid_argument);
    EnumerationOptions opt;
    opt.max_colors = 65;
    EXPECT_THROW(for_each_proper_coloring(g, opt, [](std::span<const Color>) { return true; }), std::invalid_argument);
    opt.max_colors = 3;
    opt.prefix = {1};
    EXPECT_THROW(for_each_proper_coloring(g, opt, [](std::span<const Color>) { return true; }), std::invalid_argument);
}

TEST(Coloring, CanonicalRelabelAndProfile)
{
    std::vector<Color> c{5, 2, 5, 9};
    EXPECT_FALSE(is_canonical(c));
    EXPECT_EQ(canonical_relabel(c), (std::vector<Color>{0, 1, 0, 2}));
    auto prof = color_class_profile(EdgeColoring::unchecked({0, 1, 0, 2, 0, 1}));
    EXPECT_EQ(prof.sizes, (std::vector<std::size_t>{3, 2, 1}));
    EXPECT_EQ(prof.largest(), 3u);
    EXPECT_EQ(prof.smallest(), 1u);
}

TEST(OneFactorization, PerfectMatchingsForEveryColor)
{
    for (int m = 1; m <= 6; ++m) {
        auto c = one_factorization(m);
        auto g = make_complete(2 * m);
        ASSERT_TRUE(is_proper(g, c.colors()));
        EXPECT_EQ(c.num_colors(), static_cast<std::size_t>(2 * m - 1));
        for (auto& [col, edges] : color_classes(c.colors()))
            EXPECT_EQ(edges.size(), static_cast<std::size_t>(m)) << "color " << col;
    }
    EXPECT_THROW(one_factorization(0), std::invalid_argument);
}

TEST(OneFactorization, K6IsUniqueUpToRelabeling)
{
    // canonical 5-colorings of K_6 are exactly the 1-factorizations
    auto list = enumerate_proper_colorings(make_complete(6), 5).colorings;
    EXPECT_FALSE(list.empty());
    for (const auto& c : list)
        for (auto& [col, edges] : color_classes(c.colors()))
            EXPECT_EQ(edges.size(), 3u);
    EXPECT_EQ(list.size(), 6u) << "1-factorizations of K_6 with a fixed first-edge order";
}

TEST(MisraGries, AtMostDeltaPlusOneOnRandomGraphs)
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 14);
        std::vector<Edge> e;
        std::bernoulli_distribution keep(0.1 + (trial % 9) * 0.1);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (keep(rng))
                    e.push_back({a, b});
        Graph g(n, e);
        auto c = greedy_delta_plus_one(g);
        ASSERT_TRUE(is_proper(g, c.colors())) << trial;
        for (auto x : c.colors())
            EXPECT_LE(x, g.max_degree());
    }
}

TEST(MisraGries, ExtremeCases)
{
    EXPECT_EQ(greedy_delta_plus_one(Graph(3, {})).size(), 0u);
    auto c = greedy_delta_plus_one(make_complete(7));
    EXPECT_LE(c.num_colors(), 7u);
    EXPECT_TRUE(is_proper(make_complete(7), c.colors()));
}
