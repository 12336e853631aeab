#include <gtest/gtest.h>

#include <map>
#include <sstream>

#include "egocs/graph.hpp"
#include "oracles.hpp"

namespace egocs {
namespace {

using testing::TestRng;

TEST(Graph, DropsLoopsAndDuplicates) {
    const std::vector<Edge> edges{{0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 1}, {0, 1}};
    const Graph g = Graph::from_edges(3, edges);
    EXPECT_EQ(g.node_count(), 3u);
    EXPECT_EQ(g.edge_count(), 2u);
    EXPECT_TRUE(g.has_edge(0, 1));
    EXPECT_TRUE(g.has_edge(2, 1));
    EXPECT_FALSE(g.has_edge(0, 2));
    EXPECT_FALSE(g.has_edge(1, 1));
    EXPECT_EQ(g.max_degree(), 2u);
}

TEST(Graph, AdjacencySortedAndSymmetric) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        TestRng rng(seed);
        const std::size_t n = 5 + rng.below(60);
        const auto edges = testing::random_edges(n, 0.15, rng);
        const Graph g = Graph::from_edges(n, edges);
        std::size_t degree_sum = 0;
        for (NodeId u = 0; u < n; ++u) {
            const auto nb = g.neighbors(u);
            degree_sum += nb.size();
            EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
            EXPECT_EQ(std::adjacent_find(nb.begin(), nb.end()), nb.end());
            for (NodeId v : nb) {
                EXPECT_NE(u, v);
                EXPECT_TRUE(g.has_edge(v, u));
            }
        }
        EXPECT_EQ(degree_sum, 2 * g.edge_count());
        EXPECT_EQ(g.edges().size(), g.edge_count());
    }
}

TEST(Graph, EdgesRoundTrip) {
    TestRng rng(7);
    const Graph g = Graph::from_edges(40, testing::random_edges(40, 0.2, rng));
    const auto e = g.edges();
    EXPECT_TRUE(std::is_sorted(e.begin(), e.end()));
    for (auto [u, v] : e) EXPECT_LT(u, v);
    EXPECT_EQ(Graph::from_edges(40, e), g);
}

TEST(Graph, RejectsLabelCountMismatch) {
    const std::vector<Edge> edges{{0, 1}};
    EXPECT_THROW(Graph::from_edges(2, edges, {5}), InvalidArgument);
}

TEST(EdgeList, RemapsIdsInAscendingOrder) {
    std::istringstream ok("# comment\n% header\n  \n100 7\n7\t3 1.5 weight\n3,100\n");
    const Graph g = load_edge_list(ok);
    ASSERT_EQ(g.node_count(), 3u);
    EXPECT_EQ(g.label(0), 3u);
    EXPECT_EQ(g.label(1), 7u);
    EXPECT_EQ(g.label(2), 100u);
    EXPECT_EQ(g.edge_count(), 3u);
}

TEST(EdgeList, ReportsLineNumbers) {
    std::istringstream in("1 2\n3\n");
    try {
        load_edge_list(in);
        FAIL() << "expected ParseError";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 2u);
    }
    std::istringstream negative("1 -2\n");
    EXPECT_THROW(load_edge_list(negative), ParseError);
    std::istringstream word("1 2\n3 x\n");
    EXPECT_THROW(load_edge_list(word), ParseError);
    std::istringstream empty("# nothing\n");
    EXPECT_THROW(load_edge_list(empty), ParseError);
}

TEST(EdgeList, WriteThenLoadIsIdentity) {
    TestRng rng(11);
    std::vector<std::uint64_t> labels;
    for (std::uint64_t i = 0; i < 30; ++i) labels.push_back(1000 + 3 * i);
    const Graph g = testing::random_connected_graph(30, 0.1, rng);
    const Graph labelled = Graph::from_edges(30, g.edges(), labels);
    std::stringstream buf;
    write_edge_list(buf, labelled);
    EXPECT_EQ(load_edge_list(buf), labelled);
}

TEST(Bfs, MatchesFloydWarshall) {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        TestRng rng(seed);
        const std::size_t n = 2 + rng.below(50);
        const Graph g = Graph::from_edges(n, testing::random_edges(n, 0.08, rng));
        const auto fw = testing::floyd_warshall(g);
        for (NodeId s = 0; s < n; ++s) {
            const auto d = bfs_distances(g, s);
            for (NodeId t = 0; t < n; ++t) {
                if (fw[s][t] >= testing::kInf) EXPECT_EQ(d[t], kUnreachable);
                else EXPECT_EQ(d[t], fw[s][t]);
            }
        }
    }
}

TEST(Components, AgreeWithUnionFind) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        TestRng rng(seed);
        const std::size_t n = 1 + rng.below(80);
        const auto edges = testing::random_edges(n, 1.5 / static_cast<double>(n), rng);
        const Graph g = Graph::from_edges(n, edges);
        testing::UnionFind uf(n);
        for (auto [u, v] : edges) uf.unite(u, v);

        std::size_t count = 0;
        const auto comp = connected_components(g, &count);
        std::size_t roots = 0;
        for (std::size_t v = 0; v < n; ++v) roots += uf.find(v) == v;
        EXPECT_EQ(count, roots);
        for (auto [u, v] : edges) EXPECT_EQ(comp[u], comp[v]);
        for (NodeId u = 0; u < n; ++u)
            for (NodeId v = 0; v < n; ++v)
                EXPECT_EQ(comp[u] == comp[v], uf.find(u) == uf.find(v));

        // Largest component: maximal size, ties to the smallest member id.
        std::size_t best = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (uf.size_of(v) > uf.size_of(best)) best = v;
        const Graph lcc = largest_connected_component(g);
        EXPECT_EQ(lcc.node_count(), uf.size_of(best));
        EXPECT_TRUE(is_connected(lcc));
        for (NodeId v = 0; v < lcc.node_count(); ++v)
            EXPECT_EQ(uf.find(static_cast<std::size_t>(lcc.label(v))), uf.find(best));
    }
}

TEST(Components, TieGoesToSmallestId) {
    const std::vector<Edge> edges{{3, 4}, {0, 1}};
    const Graph lcc = largest_connected_component(Graph::from_edges(5, edges));
    ASSERT_EQ(lcc.node_count(), 2u);
    EXPECT_EQ(lcc.label(0), 0u);
    EXPECT_EQ(lcc.label(1), 1u);
}

TEST(Closeness, ClosedForms) {
    const auto c6 = closeness_exact(testing::cycle_graph(6));
    for (double c : c6.values()) EXPECT_DOUBLE_EQ(c, 5.0 / 9.0);

    const auto star = closeness_exact(testing::star_graph(4));
    EXPECT_DOUBLE_EQ(star[0], 1.0);
    for (NodeId v = 1; v <= 4; ++v) EXPECT_DOUBLE_EQ(star[v], 4.0 / 7.0);

    const auto p3 = closeness_exact(testing::path_graph(3));
    EXPECT_DOUBLE_EQ(p3[0], 2.0 / 3.0);
    EXPECT_DOUBLE_EQ(p3[1], 1.0);

    const auto k5 = closeness_exact(testing::complete_graph(5));
    for (double c : k5.values()) EXPECT_DOUBLE_EQ(c, 1.0);
}

TEST(Closeness, MatchesFloydWarshallOracle) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        TestRng rng(seed + 100);
        const Graph g = testing::random_connected_graph(2 + rng.below(60), 0.05, rng);
        const auto got = closeness_exact(g);
        const auto want = testing::closeness_oracle(g);
        for (std::size_t v = 0; v < want.size(); ++v) EXPECT_NEAR(got[v], want[v], 1e-12);
    }
}

// Sizes straddle the 64-source batch width, so partial batches are covered.
TEST(Closeness, EqualsPerSourceBfsAcrossBatchSizes) {
    for (std::size_t n : {63, 64, 65, 129, 200}) {
        TestRng rng(n);
        const Graph g = testing::random_connected_graph(n, 0.02, rng);
        const auto got = closeness_exact(g);
        for (NodeId s = 0; s < n; ++s) {
            std::uint64_t total = 0;
            for (Distance d : bfs_distances(g, s)) total += d;
            EXPECT_EQ(got[s], static_cast<double>(n - 1) / static_cast<double>(total)) << "n=" << n << " s=" << s;
        }
    }
}

TEST(Closeness, RejectsDisconnected) {
    const std::vector<Edge> edges{{0, 1}, {2, 3}};
    EXPECT_THROW(closeness_exact(Graph::from_edges(4, edges)), DisconnectedGraph);
}

TEST(Stats, ClosedForms) {
    const auto k4 = network_stats(testing::complete_graph(4));
    EXPECT_EQ(k4.nodes, 4u);
    EXPECT_EQ(k4.edges, 6u);
    EXPECT_DOUBLE_EQ(k4.avg_degree, 3.0);
    EXPECT_DOUBLE_EQ(k4.avg_clustering, 1.0);
    EXPECT_EQ(k4.diameter, 1u);
    EXPECT_FALSE(k4.sampled());

    const auto star = network_stats(testing::star_graph(5));
    EXPECT_DOUBLE_EQ(star.avg_clustering, 0.0);
    EXPECT_EQ(star.diameter, 2u);

    const auto p5 = network_stats(testing::path_graph(5));
    EXPECT_EQ(p5.diameter, 4u);
    EXPECT_DOUBLE_EQ(p5.avg_degree, 8.0 / 5.0);
}

TEST(Stats, ClusteringMatchesTriangleCount) {
    TestRng rng(5);
    const Graph g = testing::random_connected_graph(40, 0.2, rng);
    const auto cc = local_clustering(g);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const auto nb = g.neighbors(v);
        std::size_t links = 0;
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) links += g.has_edge(nb[i], nb[j]);
        const double k = static_cast<double>(nb.size());
        const double want = nb.size() < 2 ? 0.0 : 2.0 * static_cast<double>(links) / (k * (k - 1.0));
        EXPECT_NEAR(cc[v], want, 1e-15);
    }
}

TEST(Stats, EffectiveDiameterInterpolates) {
    // 10 pairs at distance 1, 10 at 2: the 0.9 point falls 80% into hop 2.
    const std::vector<std::uint64_t> hist{0, 10, 10};
    EXPECT_NEAR(effective_diameter(hist, 0.9), 1.8, 1e-12);
    // All pairs adjacent: F(0) = 0 and F(1) = 1.
    const std::vector<std::uint64_t> flat{0, 12};
    EXPECT_NEAR(effective_diameter(flat, 0.9), 0.9, 1e-12);
}

TEST(Stats, EffectiveDiameterBoundedByDiameter) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        TestRng rng(seed);
        const Graph g = testing::random_connected_graph(30 + rng.below(30), 0.03, rng);
        const auto s = network_stats(g);
        const auto fw = testing::floyd_warshall(g);
        std::uint32_t diam = 0;
        for (const auto &row : fw)
            for (auto d : row) diam = std::max(diam, d);
        EXPECT_EQ(s.diameter, diam);
        EXPECT_LE(s.effective_diameter_90, static_cast<double>(diam));
        EXPECT_GT(s.effective_diameter_90, 0.0);
    }
}

TEST(Stats, SamplesSourcesAboveLimit) {
    TestRng rng(1);
    const Graph g = testing::random_connected_graph(200, 0.02, rng);
    const auto sampled = network_stats(g, 50, 9);
    EXPECT_TRUE(sampled.sampled());
    EXPECT_EQ(sampled.bfs_sources, 50u);
    const auto exact = network_stats(g);
    EXPECT_LE(sampled.diameter, exact.diameter);
    EXPECT_DOUBLE_EQ(sampled.avg_clustering, exact.avg_clustering);
    EXPECT_EQ(network_stats(g, 50, 9).diameter, sampled.diameter);
}

} // namespace
} // namespace egocs
