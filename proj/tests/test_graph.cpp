#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rainbow/graph.hpp"

using namespace rainbow;

TEST(Graph, NormalizesAndSortsEdges)
{
    Graph g(4, {{3, 2}, {1, 0}, {2, 0}});
    ASSERT_EQ(g.size(), 3u);
    EXPECT_EQ(g.edge(0), (Edge{0, 1}));
    EXPECT_EQ(g.edge(1), (Edge{0, 2}));
    EXPECT_EQ(g.edge(2), (Edge{2, 3}));
    EXPECT_EQ(g.edge_index(3, 2), 2u);
    EXPECT_FALSE(g.edge_index(1, 3).has_value());
    EXPECT_EQ(g.degree(0), 2);
    EXPECT_EQ(g.max_degree(), 2);
}

TEST(Graph, RejectsBadInput)
{
    EXPECT_THROW(Graph(3, {{0, 0}}), std::invalid_argument);
    EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    EXPECT_THROW(Graph(3, {{0, 3}}), std::invalid_argument);
    EXPECT_THROW(Graph(-1, {}), std::invalid_argument);
    EXPECT_THROW(Graph(2, {{0, 1}}, {"a"}), std::invalid_argument);
}

TEST(Graph, IncidentEdgesParallelNeighbors)
{
    auto g = make_complete(5);
    for (Vertex v = 0; v < g.order(); ++v) {
        auto nb = g.neighbors(v);
        auto inc = g.incident_edges(v);
        ASSERT_EQ(nb.size(), inc.size());
        EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
        for (std::size_t i = 0; i < nb.size(); ++i)
            EXPECT_EQ(g.edge_index(v, nb[i]), inc[i]);
    }
}

TEST(Graph, EqualityIgnoresLabels)
{
    Graph a(2, {{0, 1}}, {"p", "q"});
    Graph b(2, {{1, 0}});
    EXPECT_EQ(a, b);
}

TEST(Families, EdgeAndVertexCounts)
{
    EXPECT_EQ(make_path(4).size(), 4u);
    EXPECT_EQ(make_path(4).order(), 5);
    EXPECT_EQ(make_cycle(6).size(), 6u);
    EXPECT_EQ(make_complete(6).size(), 15u);
    EXPECT_EQ(make_double_star(2, 3).size(), 6u);
    EXPECT_EQ(make_caterpillar({1, 1, 1}).size(), 5u);
    EXPECT_EQ(make_perfect_kary(2, 2).size(), 6u);
    EXPECT_EQ(make_perfect_kary(3, 2).size(), 12u);
    EXPECT_THROW(make_path(0), std::invalid_argument);
    EXPECT_THROW(make_cycle(2), std::invalid_argument);
    EXPECT_THROW(make_double_star(-1, 2), std::invalid_argument);
    EXPECT_THROW(make_perfect_kary(1, 2), std::invalid_argument);
}

TEST(Families, DoubleStarLayout)
{
    auto g = make_double_star(2, 3);
    EXPECT_EQ(g.label(0), "y");
    EXPECT_EQ(g.label(1), "x");
    EXPECT_EQ(g.degree(0), 3);
    EXPECT_EQ(g.degree(1), 4);
    EXPECT_EQ(diameter(g), 3);
    EXPECT_EQ(diameter(make_double_star(0, 3)), 2);
}

TEST(Families, BroomIsDoubleStar)
{
    EXPECT_TRUE(oracle::isomorphic(make_broom(3, 2), make_double_star(1, 2)));
    EXPECT_TRUE(oracle::isomorphic(make_broom(4, 1), make_path(4)));
    EXPECT_FALSE(oracle::isomorphic(make_broom(4, 2), make_double_star(1, 3)));
}

TEST(Families, CaterpillarLabels)
{
    auto g = make_caterpillar({2, 0, 1});
    EXPECT_EQ(g.label(0), "x_1");
    EXPECT_EQ(g.label(3), "v_{1,1}");
    EXPECT_EQ(g.label(5), "v_{3,1}");
    EXPECT_TRUE(is_tree(g));
}

TEST(Families, PerfectKaryStructure)
{
    auto g = make_perfect_kary(3, 2);
    EXPECT_EQ(g.degree(0), 3);
    EXPECT_EQ(diameter(g), 4);
    EXPECT_TRUE(is_tree(g));
    EXPECT_THROW(make_perfect_kary(3, 6, 100), CapExceeded);
}

TEST(Families, NearRegularDegrees)
{
    for (int n = 2; n <= 12; ++n)
        for (int d = 0; d < n; ++d) {
            auto g = make_near_regular(n, d);
            int low = 0;
            for (Vertex v = 0; v < n; ++v) {
                if (g.degree(v) == d - 1)
                    ++low;
                else
                    EXPECT_EQ(g.degree(v), d) << n << " " << d;
            }
            EXPECT_EQ(low, (n * d) % 2) << n << " " << d;
        }
    EXPECT_THROW(make_near_regular(4, 4), std::invalid_argument);
}

TEST(Families, CapIsEnforced)
{
    EXPECT_THROW(make_complete(65), CapExceeded);
    EXPECT_NO_THROW(make_complete(65, 65));
    EXPECT_THROW(make_path(10, 5), CapExceeded);
}

TEST(Queries, TreesAndDistances)
{
    EXPECT_TRUE(is_tree(make_path(3)));
    EXPECT_FALSE(is_tree(make_cycle(3)));
    EXPECT_FALSE(is_tree(Graph(4, {{0, 1}, {2, 3}})));
    EXPECT_EQ(diameter(Graph(4, {{0, 1}, {2, 3}})), -1);
    EXPECT_EQ(diameter(make_cycle(7)), 3);
    auto d = bfs_distances(make_path(3), 0);
    EXPECT_EQ(d, (std::vector<int>{0, 1, 2, 3}));
    EXPECT_EQ(make_double_star(1, 2).degree_sequence(), (std::vector<int>{3, 2, 1, 1, 1}));
}
