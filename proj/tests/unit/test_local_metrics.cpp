#include <gtest/gtest.h>

#include "egocs/generators.hpp"
#include "egocs/local_metrics.hpp"
#include "oracles.hpp"

namespace egocs {
namespace {

using testing::TestRng;

// Ring sizes from the all-pairs distance matrix.
std::vector<std::size_t> rings_oracle(const std::vector<std::vector<std::uint32_t>> &d, NodeId v, int h) {
    std::vector<std::size_t> rings(static_cast<std::size_t>(h), 0);
    for (auto dist : d[v])
        if (dist >= 1 && dist <= static_cast<std::uint32_t>(h)) ++rings[dist - 1];
    return rings;
}

TEST(EgoRings, MatchFloydWarshall) {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        TestRng rng(seed);
        const std::size_t n = 2 + rng.below(50);
        const Graph g = Graph::from_edges(n, testing::random_edges(n, 0.1, rng));
        const auto d = testing::floyd_warshall(g);
        for (int h = 1; h <= 4; ++h) {
            const auto ego = ego_closeness(g, h);
            const auto daccer = daccer_vol(g, h);
            const auto farness = dist_exact_score(g, h);
            for (NodeId v = 0; v < n; ++v) {
                const auto want = rings_oracle(d, v, h);
                EXPECT_EQ(ego_rings(g, v, h).ring_sizes, want);
                double e = 0.0;
                double f = 0.0;
                for (int t = 1; t <= h; ++t) {
                    e += static_cast<double>(want[t - 1]) / t;
                    f += static_cast<double>(t) * static_cast<double>(want[t - 1]);
                }
                double vol = 0.0;
                for (NodeId w = 0; w < n; ++w)
                    if (d[v][w] <= static_cast<std::uint32_t>(h)) vol += static_cast<double>(g.degree(w));
                EXPECT_NEAR(ego[v], e, 1e-12);
                EXPECT_DOUBLE_EQ(farness[v], f);
                EXPECT_DOUBLE_EQ(daccer[v], vol);
            }
        }
    }
}

TEST(EgoCloseness, RadiusOneIsDegree) {
    TestRng rng(3);
    const Graph g = Graph::from_edges(60, testing::random_edges(60, 0.1, rng));
    const auto ego = ego_closeness(g, 1);
    const auto deg = degree_scores(g);
    EXPECT_EQ(ego.vector(), deg.vector());
}

TEST(EgoCloseness, ClosedForms) {
    // Star with 5 leaves: hub sees 5 at distance 1; a leaf sees 1 + 4/2.
    const auto star = ego_closeness(testing::star_graph(5), 2);
    EXPECT_DOUBLE_EQ(star[0], 5.0);
    EXPECT_DOUBLE_EQ(star[1], 3.0);
    // Long cycle: every node has rings of size 2.
    const auto cycle = ego_closeness(testing::cycle_graph(10), 3);
    for (double v : cycle.values()) EXPECT_DOUBLE_EQ(v, 2.0 + 1.0 + 2.0 / 3.0);
}

TEST(EgoCloseness, MonotoneInRadius) {
    const Graph g = gen_ba(200, 3, 4);
    const auto h1 = ego_closeness(g, 1);
    const auto h2 = ego_closeness(g, 2);
    const auto h3 = ego_closeness(g, 3);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        EXPECT_LE(h1[v], h2[v]);
        EXPECT_LE(h2[v], h3[v]);
    }
}

TEST(EgoCloseness, IsolatedNodeScoresZero) {
    const std::vector<Edge> edges{{0, 1}};
    const auto ego = ego_closeness(Graph::from_edges(3, edges), 2);
    EXPECT_EQ(ego[2], 0.0);
}

TEST(EgoCloseness, RejectsBadRadius) {
    const Graph g = testing::path_graph(4);
    EXPECT_THROW(ego_closeness(g, 0), InvalidArgument);
    EXPECT_THROW(ego_rings(g, 9, 2), InvalidArgument);
}

TEST(LocalMetric, NamesRoundTrip) {
    for (auto m : {LocalMetric::ego, LocalMetric::daccer, LocalMetric::dist_exact, LocalMetric::degree})
        EXPECT_EQ(parse_local_metric(to_string(m)), m);
    EXPECT_EQ(parse_local_metric("dist-exact"), LocalMetric::dist_exact);
    EXPECT_THROW(parse_local_metric("pagerank"), InvalidArgument);
}

TEST(LocalMetric, ParallelMatchesSerial) {
    const Graph g = gen_er_avg_degree(400, 8.0, 2);
    const auto parallel = ego_closeness(g, 2);
    for (NodeId v = 0; v < g.node_count(); v += 37) {
        const auto rings = ego_rings(g, v, 2).ring_sizes;
        EXPECT_DOUBLE_EQ(parallel[v], static_cast<double>(rings[0]) + static_cast<double>(rings[1]) / 2.0);
    }
}

} // namespace
} // namespace egocs
