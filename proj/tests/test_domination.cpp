#include <random>

#include <gtest/gtest.h>

#include <ggk/domination.hpp>
#include <ggk/fixtures.hpp>
#include <ggk/tree_enum.hpp>

using namespace ggk;

namespace {

// Plain k-subset enumeration over bitmasks.
GammaSets subset_oracle(const Graph& g) {
    const int n = g.order();
    GammaSets out;
    for (int k = 1; k <= n; ++k) {
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
            if (std::popcount(m) != k) continue;
            VertexSet s = VertexSet::from_mask(m);
            if (is_dominating(g, s)) out.sets.push_back(s);
        }
        if (!out.sets.empty()) {
            out.gamma = k;
            std::sort(out.sets.begin(), out.sets.end());
            return out;
        }
    }
    return out;
}

} // namespace

TEST(Domination, PrivateNeighbours) {
    Graph p = make_path(5);
    VertexSet d{1, 4};
    EXPECT_EQ(private_neighbours(p, d, 1), (VertexSet{0, 1, 2}));
    EXPECT_EQ(private_neighbours(p, d, 4), (VertexSet{3, 4}));
    EXPECT_EQ(external_private_neighbours(p, d, 4), (VertexSet{3}));
    EXPECT_EQ(private_neighbours(p, VertexSet{1, 3}, 1), (VertexSet{0, 1}));
    EXPECT_THROW(private_neighbours(p, d, 2), precondition_error);
}

TEST(Domination, SmallExamples) {
    EXPECT_EQ(enumerate_gamma_sets(make_path(3)).sets, (std::vector<VertexSet>{{1}}));
    GammaSets p4 = enumerate_gamma_sets(make_path(4));
    EXPECT_EQ(p4.gamma, 2);
    EXPECT_EQ(p4.sets, (std::vector<VertexSet>{{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
    EXPECT_EQ(enumerate_gamma_sets(make_star(5)).sets, (std::vector<VertexSet>{{0}}));
    EXPECT_EQ(enumerate_gamma_sets(Graph(1)).sets, (std::vector<VertexSet>{{0}}));
    EXPECT_EQ(enumerate_gamma_sets(Graph(3)).sets, (std::vector<VertexSet>{{0, 1, 2}}));
}

TEST(Domination, MatchesSubsetOracleOnRandomGraphs) {
    std::mt19937 rng(3);
    for (int it = 0; it < 150; ++it) {
        int n = 1 + static_cast<int>(rng() % 12);
        Graph g(n);
        std::bernoulli_distribution coin(0.3);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) g.add_edge(u, v);
        GammaSets a = enumerate_gamma_sets(g), b = subset_oracle(g);
        EXPECT_EQ(a.gamma, b.gamma);
        EXPECT_EQ(a.sets, b.sets);
    }
}

TEST(Domination, MatchesSubsetOracleOnTrees) {
    for (const Graph& t : enumerate_trees_up_to(10)) {
        GammaSets a = enumerate_gamma_sets(t), b = subset_oracle(t);
        ASSERT_EQ(a.sets, b.sets);
    }
}

TEST(Domination, Cap) {
    EXPECT_THROW(enumerate_gamma_sets(make_path(33)), precondition_error);
    EXPECT_NO_THROW(enumerate_gamma_sets(make_path(20), 20));
}

TEST(Highest, Examples) {
    EXPECT_EQ(highest_gamma_set(bfs_root(make_path(4), 0)), (VertexSet{0, 2}));
    EXPECT_EQ(highest_gamma_set(bfs_root(make_path(7), 0)), (VertexSet{0, 2, 5}));
    EXPECT_EQ(highest_gamma_set(bfs_root(make_star(3), 0)), (VertexSet{0}));
    EXPECT_EQ(highest_gamma_set(bfs_root(Graph(1), 0)), (VertexSet{0}));
    EXPECT_EQ(highest_gamma_set(bfs_root(make_path(2), 1)), (VertexSet{1}));
}

TEST(Highest, UniqueMinimumHeightForEveryRoot) {
    for (const Graph& t : enumerate_trees_up_to(8)) {
        GammaSets all = enumerate_gamma_sets(t);
        for (int c = 0; c < t.order(); ++c) {
            RootedTree rt = bfs_root(t, c);
            int best = 1 << 30, count = 0;
            VertexSet lowest;
            for (const VertexSet& d : all.sets) {
                int h = set_height(rt, d);
                if (h < best) {
                    best = h;
                    count = 1;
                    lowest = d;
                } else if (h == best) {
                    ++count;
                }
            }
            ASSERT_EQ(count, 1);
            ASSERT_EQ(highest_gamma_set(rt), lowest);
            EXPECT_TRUE(is_highest(rt, lowest));
            for (const VertexSet& d : all.sets)
                if (d != lowest) EXPECT_FALSE(is_highest(rt, d));
        }
    }
}

TEST(Highest, Predicates) {
    RootedTree rt = bfs_root(make_path(4), 0);
    EXPECT_TRUE(is_gamma_set_of_tree(rt, VertexSet{1, 3}));
    EXPECT_FALSE(is_gamma_set_of_tree(rt, VertexSet{0, 1}));
    EXPECT_THROW(is_highest(rt, VertexSet{0, 1, 2}), precondition_error);
    EXPECT_EQ(set_height(rt, VertexSet{1, 3}), 4);
}
