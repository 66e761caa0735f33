#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include <ggk/canonical.hpp>
#include <ggk/characterization.hpp>
#include <ggk/fixtures.hpp>
#include <ggk/gamma_graph.hpp>
#include <ggk/graph_io.hpp>
#include <ggk/structure.hpp>
#include <ggk/tree_enum.hpp>

using namespace ggk;

namespace {

// Counts 4-cycles by trying the three pairings of every 4-subset.
int four_cycle_count_oracle(const Graph& g) {
    const int n = g.order();
    int count = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    auto cyc = [&](int p, int q, int r, int s) {
                        return g.has_edge(p, q) && g.has_edge(q, r) && g.has_edge(r, s) && g.has_edge(s, p);
                    };
                    count += cyc(a, b, c, d) + cyc(a, b, d, c) + cyc(a, c, b, d);
                }
    return count;
}

Graph random_connected(std::mt19937& rng, int n, double p) {
    for (;;) {
        Graph g(n);
        std::bernoulli_distribution coin(p);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) g.add_edge(u, v);
        if (is_connected(g)) return g;
    }
}

Graph two_squares_at_a_vertex() {
    return Graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 0}});
}

std::multiset<CanonicalForm> forms(const std::vector<Graph>& gs) {
    std::multiset<CanonicalForm> out;
    for (const Graph& g : gs) out.insert(canonical_form(g));
    return out;
}

} // namespace

TEST(FourCycles, MatchOracleCount) {
    std::mt19937 rng(5);
    for (int it = 0; it < 100; ++it) {
        int n = 4 + static_cast<int>(rng() % 8);
        Graph g = random_connected(rng, n, 0.4);
        auto cycles = four_cycles(g);
        ASSERT_EQ(static_cast<int>(cycles.size()), four_cycle_count_oracle(g));
        for (const FourCycle& c : cycles) {
            EXPECT_TRUE(g.has_edge(c.w, c.x) && g.has_edge(c.x, c.y) && g.has_edge(c.y, c.z) && g.has_edge(c.z, c.w));
            EXPECT_LT(c.w, std::min({c.x, c.y, c.z}));
            EXPECT_LT(c.x, c.z);
        }
    }
    EXPECT_EQ(four_cycles(make_complete(4)).size(), 3u);
    EXPECT_EQ(four_cycles(make_hypercube(3)).size(), 6u);
}

TEST(EdgeClasses, Examples) {
    Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}});
    auto cls = classify_edges(g);
    ASSERT_EQ(cls.size(), 5u);
    for (const EdgeClass& c : cls)
        EXPECT_EQ(c.kind, c.edge == Edge(3, 4) ? EdgeKind::bridge : EdgeKind::in_four_cycle);
    EXPECT_TRUE(check_edge_classes(g).empty());

    Violations v = check_edge_classes(make_cycle(5));
    ASSERT_EQ(v.size(), 5u);
    EXPECT_EQ(v[0].tag, "lem:edge-class");
    EXPECT_EQ(to_string(EdgeKind::both), "both");
}

TEST(EdgeClasses, HoldOnSmallTrees) {
    for (const Graph& t : enumerate_trees_up_to(10)) {
        GammaGraph gg = gammatree(bfs_root(t, 0));
        EXPECT_TRUE(check_edge_classes(gg.graph()).empty());
        for (const EdgeClass& c : classify_edges(gg)) EXPECT_NE(c.kind, EdgeKind::both);
    }
}

TEST(K23, Detection) {
    K23Check k = check_k23_free(make_complete_bipartite(2, 3));
    EXPECT_FALSE(k.free);
    EXPECT_EQ(k.witness, (std::array<int, 5>{0, 1, 2, 3, 4}));
    EXPECT_TRUE(check_k23_free(make_hypercube(4)).free);
    EXPECT_FALSE(check_k23_free(make_complete(5)).free);
    for (const Graph& t : enumerate_trees_up_to(10)) EXPECT_TRUE(check_k23_free(gammatree(bfs_root(t, 0))).free);
}

TEST(FourCycleWitnesses, PathOnFourVertices) {
    GammaGraph gg = gamma_graph_oracle(make_path(4));
    Violations v;
    auto ws = four_cycle_witnesses(gg, &v);
    EXPECT_TRUE(v.empty());
    ASSERT_EQ(ws.size(), 1u);
    const FourCycleWitness& w = ws[0];
    EXPECT_EQ(gg.sets[w.cycle.w], (VertexSet{0, 2}));
    EXPECT_TRUE(gg.source.has_edge(w.a, w.c));
    EXPECT_TRUE(gg.source.has_edge(w.b, w.d));
    EXPECT_EQ(gg.sets[w.cycle.y], (VertexSet{1, 3}));
}

TEST(FourCycleWitnesses, RejectsFakeSets) {
    GammaGraph gg = gamma_graph_oracle(make_path(4));
    gg.sets[gg.find({1, 3})] = VertexSet{1, 2, 3};
    Violations v;
    four_cycle_witnesses(gg, &v);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0].tag, "prop:four-cycle");
}

TEST(CycleIncidence, Examples) {
    EXPECT_TRUE(check_cycle_incidence(gammatree(bfs_root(make_path(7), 0))).empty());
    EXPECT_TRUE(check_cycle_incidence(gammatree(bfs_root(make_path(10), 0))).empty());
    Violations v = check_cycle_incidence(two_squares_at_a_vertex());
    ASSERT_FALSE(v.empty());
    EXPECT_TRUE(std::any_of(v.begin(), v.end(), [](const Violation& x) { return x.tag == "prop:incident-cycles"; }));
    // Two squares joined by a third one through the shared vertex.
    Graph bridged = two_squares_at_a_vertex();
    bridged.add_vertex();
    bridged.add_edge(1, 7);
    bridged.add_edge(7, 4);
    bool incident = false;
    for (const Violation& x : check_cycle_incidence(bridged)) incident |= x.tag == "prop:incident-cycles";
    EXPECT_FALSE(incident);
}

TEST(CycleIncidence, AdjacentFreeNeighbours) {
    // A square with a pendant at two adjacent corners.
    Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 5}});
    Violations v = check_cycle_incidence(g);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0].tag, "prop:adjacent-free");
    Graph opposite(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {2, 5}});
    EXPECT_TRUE(check_cycle_incidence(opposite).empty());
}

TEST(CycleIncidence, HoldsOnSmallTrees) {
    for (const Graph& t : enumerate_trees_up_to(11))
        ASSERT_TRUE(check_cycle_incidence(gammatree(bfs_root(t, 0))).empty()) << serialize_graph(t);
}

TEST(Products, CartesianProduct) {
    Graph g = cartesian_product(make_path(2), make_path(3));
    EXPECT_EQ(g.order(), 6);
    EXPECT_EQ(g.size(), 7);
    EXPECT_TRUE(g.has_edge(0, 3));
    EXPECT_TRUE(g.has_edge(4, 5));
    EXPECT_TRUE(are_isomorphic(cartesian_product(make_path(2), make_path(2)), make_cycle(4)));
    EXPECT_TRUE(are_isomorphic(product_of({make_path(2), make_path(2), make_path(2)}), make_hypercube(3)));
    EXPECT_EQ(product_of({}).order(), 1);
}

TEST(Factorization, Examples) {
    auto count = [](const Graph& g) { return factorize_cartesian(g).factors.size(); };
    EXPECT_EQ(count(make_cycle(4)), 2u);
    EXPECT_EQ(count(make_path(3)), 1u);
    EXPECT_EQ(count(cartesian_product(make_cycle(4), make_path(3))), 3u);
    EXPECT_EQ(count(make_hypercube(4)), 4u);
    EXPECT_EQ(count(make_complete_bipartite(2, 3)), 1u);
    EXPECT_EQ(count(make_stepgrid(3)), 1u);
    EXPECT_EQ(count(make_complete(4)), 1u);
    EXPECT_EQ(count(cartesian_product(make_complete(3), make_cycle(5))), 2u);
    EXPECT_EQ(count(Graph(1)), 1u);
    EXPECT_FALSE(factorize_cartesian(make_path(5)).is_product());
    EXPECT_THROW(factorize_cartesian(Graph(2)), precondition_error);
    EXPECT_THROW(factorize_cartesian(Graph()), precondition_error);
}

TEST(Factorization, CoordinatesRebuildTheGraph) {
    Graph g = cartesian_product(make_cycle(5), make_path(3));
    CartesianFactorization f = factorize_cartesian(g);
    ASSERT_EQ(f.factors.size(), 2u);
    std::vector<int> map;
    for (const auto& c : f.coordinates) map.push_back(c[0] * f.factors[1].order() + c[1]);
    EXPECT_TRUE(is_isomorphism(g, product_of(f.factors), map));
}

TEST(Factorization, RandomProductsOfPrimes) {
    const std::vector<Graph> primes{make_path(2), make_path(3), make_path(4), make_complete(3),
                                    make_cycle(5), make_star(3), make_complete_bipartite(2, 3)};
    std::mt19937 rng(17);
    int done = 0;
    while (done < 200) {
        std::vector<Graph> parts;
        int order = 1, k = 2 + static_cast<int>(rng() % 3);
        for (int i = 0; i < k; ++i) {
            const Graph& p = primes[rng() % primes.size()];
            if (order * p.order() > 30) break;
            order *= p.order();
            parts.push_back(p);
        }
        if (parts.size() < 2) continue;
        Graph g = product_of(parts);
        std::vector<int> perm(static_cast<std::size_t>(g.order()));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CartesianFactorization f = factorize_cartesian(relabel(g, perm));
        ASSERT_EQ(forms(f.factors), forms(parts));
        ++done;
    }
}

TEST(AlphaDagger, Examples) {
    EXPECT_EQ(alpha_dagger(make_cycle(4), 0), 1);
    EXPECT_EQ(alpha_dagger(make_star(3), 0), 3);
    EXPECT_EQ(alpha_dagger(make_hypercube(3), 0), 1);
    EXPECT_EQ(alpha_dagger(make_star(3), 1), 1);
    EXPECT_EQ(alpha_dagger(Graph(1), 0), 0);
    // Square with a pendant: the pendant edge is independent of both square edges.
    Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
    EXPECT_EQ(alpha_dagger(g, 0), 2);
    EXPECT_THROW(alpha_dagger(g, 5), precondition_error);
}

TEST(Stems, PathOnFiveVertices) {
    StemAnalysis a = analyze_stems(gammatree(bfs_root(make_path(5), 0)));
    EXPECT_TRUE(a.violations.empty());
    ASSERT_EQ(a.stems.size(), 1u);
    const StemReport& r = a.stems[0];
    EXPECT_EQ(r.leaves.size(), 2u);
    EXPECT_FALSE(r.x.has_value());
    EXPECT_TRUE(r.all_external());
    EXPECT_EQ(r.degree_in_g_prime, 0);
}

TEST(Stems, YFour) {
    StemAnalysis a = analyze_stems(gammatree(bfs_root(make_y(4), 0)));
    EXPECT_TRUE(a.violations.empty());
    ASSERT_EQ(a.stems.size(), 1u);
    EXPECT_EQ(a.stems[0].leaves.size(), 4u);
    EXPECT_EQ(a.stems[0].x, 0);
    EXPECT_FALSE(a.stems[0].all_external());
}

TEST(Stems, LinkedYThrees) {
    Graph y = make_y(3);
    GammaGraph gg = gammatree(bfs_root(link_trees(y, 1, y, 1), 0));
    StemAnalysis a = analyze_stems(gg);
    EXPECT_TRUE(a.violations.empty());
    ASSERT_EQ(a.stems.size(), 2u);
    for (const StemReport& r : a.stems) {
        EXPECT_EQ(r.leaves.size(), 2u);
        EXPECT_TRUE(r.x.has_value());
        EXPECT_EQ(r.degree_in_g_prime, 1);
    }
}

TEST(Stems, HoldOnSmallTrees) {
    for (const Graph& t : enumerate_trees_up_to(10)) {
        StemAnalysis a = analyze_stems(gammatree(bfs_root(t, 0)));
        ASSERT_TRUE(a.violations.empty()) << a.violations[0].tag << " " << a.violations[0].details;
    }
}

TEST(ProductTheorem, Examples) {
    ProductTheoremReport r = check_product_theorem(make_path(4), make_path(4));
    EXPECT_TRUE(r.holds);
    EXPECT_TRUE(r.via_bijection);
    EXPECT_TRUE(are_isomorphic(gamma_graph_oracle(r.tree).graph(),
                               cartesian_product(make_cycle(4), make_cycle(4))));

    ProductTheoremReport r2 = check_product_theorem(make_path(2), make_path(5));
    EXPECT_TRUE(r2.holds);
    EXPECT_TRUE(are_isomorphic(gamma_graph_oracle(r2.tree).graph(), cartesian_product(make_path(2), make_path(3))));

    ProductTheoremReport r3 = check_product_theorem(make_path(3), make_path(3));
    EXPECT_TRUE(r3.holds);
    EXPECT_EQ(gamma_graph_oracle(r3.tree).order(), 1);
}

TEST(ProductTheorem, Errors) {
    EXPECT_THROW(check_product_theorem(Graph(1), make_path(3)), precondition_error);
    EXPECT_THROW(check_product_theorem(make_path(3), make_path(3), std::pair{0, 1}), precondition_error);
    EXPECT_THROW(check_product_theorem(make_cycle(3), make_path(3)), precondition_error);
}

TEST(ProductTheorem, AllStemPairsOfSmallTrees) {
    std::vector<Graph> trees = enumerate_trees_up_to(6);
    for (const Graph& a : trees)
        for (const Graph& b : trees) {
            if (a.order() < 2 || b.order() < 2) continue;
            for (int s1 = 0; s1 < a.order(); ++s1)
                for (int s2 = 0; s2 < b.order(); ++s2) {
                    auto stem = [](const Graph& t, int v) {
                        for (int u : t.neighbours(v))
                            if (t.degree(u) == 1) return true;
                        return false;
                    };
                    if (!stem(a, s1) || !stem(b, s2)) continue;
                    ProductTheoremReport r = check_product_theorem(a, b, std::pair{s1, s2});
                    Graph expected = cartesian_product(gamma_graph_oracle(a).graph(), gamma_graph_oracle(b).graph());
                    ASSERT_TRUE(are_isomorphic(gamma_graph_oracle(r.tree).graph(), expected));
                    EXPECT_TRUE(r.holds);
                }
        }
}
