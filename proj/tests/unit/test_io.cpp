#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "egocs/config.hpp"
#include "egocs/graph.hpp"
#include "egocs/io.hpp"
#include "oracles.hpp"

namespace egocs {
namespace {

using testing::TestRng;

TEST(FormatDouble, RoundTripsExactly) {
    TestRng rng(1);
    for (int i = 0; i < 1000; ++i) {
        const double v = std::ldexp(rng.unit(), static_cast<int>(rng.below(200)) - 100);
        EXPECT_EQ(io::parse_double(io::format_double(v)), v);
    }
    EXPECT_EQ(io::format_double(0.5), "0.5");
    EXPECT_EQ(io::format_double(3.0), "3");
    EXPECT_THROW(io::parse_double("1.5x"), ParseError);
    EXPECT_THROW(io::parse_double(""), ParseError);
}

TEST(NodeValues, RoundTripSortedByLabel) {
    const std::vector<std::uint64_t> labels{30, 10, 20};
    const io::LabelIndex index(labels);
    const std::vector<double> values{0.3, 0.1, 0.2};
    std::stringstream buf;
    io::write_node_values(buf, index, values, "score");
    EXPECT_EQ(buf.str(), "node_id,score\n10,0.1\n20,0.2\n30,0.3\n");
    EXPECT_EQ(io::read_node_values(buf, index), values);
}

TEST(NodeValues, RejectsIncompleteOrForeignRows) {
    const io::LabelIndex index = io::LabelIndex::identity(3);
    std::istringstream missing("node_id,score\n0,1\n1,2\n");
    EXPECT_THROW(io::read_node_values(missing, index), ParseError);
    std::istringstream foreign("node_id,score\n0,1\n1,2\n2,3\n9,1\n");
    EXPECT_THROW(io::read_node_values(foreign, index), ParseError);
    std::istringstream duplicate("node_id,score\n0,1\n0,1\n1,2\n2,3\n");
    EXPECT_THROW(io::read_node_values(duplicate, index), ParseError);
    std::istringstream headless("0,1\n1,2\n2,3\n");
    EXPECT_THROW(io::read_node_values(headless, index), ParseError);
}

TEST(Measurements, RoundTrip) {
    TestRng rng(2);
    auto ms = testing::random_system(25, 40, 0.2, rng);
    std::vector<std::uint64_t> labels(40);
    for (std::size_t i = 0; i < 40; ++i) labels[i] = 1000 - 7 * i;
    const io::LabelIndex index(labels);
    std::stringstream buf;
    io::write_measurements(buf, ms, index);
    const auto back = io::read_measurements(buf, index, ms.walk_length);
    EXPECT_EQ(back, ms);
}

TEST(Measurements, RejectsMalformedRows) {
    const auto index = io::LabelIndex::identity(4);
    std::istringstream no_colon("3 0 1\n");
    EXPECT_THROW(io::read_measurements(no_colon, index), ParseError);
    std::istringstream unknown("3: 0 9\n");
    EXPECT_THROW(io::read_measurements(unknown, index), ParseError);
    std::istringstream repeated("3: 1 1\n");
    EXPECT_THROW(io::read_measurements(repeated, index), ParseError);
    std::istringstream ok("# comment\n2.5: 3 1\n\n0:\n");
    const auto ms = io::read_measurements(ok, index);
    ASSERT_EQ(ms.num_measurements(), 2u);
    EXPECT_EQ(ms.row_supports[0], (std::vector<NodeId>{1, 3}));
    EXPECT_TRUE(ms.row_supports[1].empty());
}

TEST(Sidecar, RoundTrip) {
    io::MatrixSidecar meta;
    meta.m = 200;
    meta.l = 125;
    meta.seed = 7;
    meta.builder = "dicenod";
    meta.score_metric = "ego";
    meta.h = 2;
    meta.nodes = 500;
    meta.d = 50.5;
    const auto back = io::parse_sidecar(io::sidecar_json(meta));
    EXPECT_EQ(back.m, 200u);
    EXPECT_EQ(back.l, 125u);
    EXPECT_EQ(back.seed, 7u);
    EXPECT_EQ(back.builder, "dicenod");
    EXPECT_EQ(back.nodes, 500u);
    EXPECT_EQ(back.d, 50.5);
    EXPECT_THROW(io::parse_sidecar("{\"m\": 1}"), ParseError);
    EXPECT_THROW(io::parse_sidecar("not json"), ParseError);
}

TEST(Stats, CsvFlagsSampling) {
    NetworkStats s;
    s.nodes = 10;
    s.edges = 12;
    s.avg_degree = 2.4;
    s.diameter = 4;
    s.effective_diameter_90 = 3.5;
    s.bfs_sources = 10;
    std::ostringstream exact;
    io::write_stats(exact, s);
    EXPECT_EQ(exact.str(), "nodes,edges,avg_deg,avg_cc,diameter,eff_diameter_90\n10,12,2.4,0,4,3.5\n");
    s.bfs_sources = 5;
    std::ostringstream sampled;
    io::write_stats(sampled, s);
    EXPECT_NE(sampled.str().find("# sampled_sources=5"), std::string::npos);
}

TEST(Digest, KnownValues) {
    EXPECT_EQ(io::digest(""), "cbf29ce484222325");
    EXPECT_EQ(io::digest("a"), "af63dc4c8601ec8c");
    EXPECT_NE(io::digest("ab"), io::digest("ba"));
}

TEST(Config, KeyValues) {
    const auto kv = parse_key_values("# header\n[graph]\nmodel = ba  # inline\nn=500\nname = \"a # b\"\n\n");
    EXPECT_EQ(kv.at("model"), "ba");
    EXPECT_EQ(kv.at("n"), "500");
    EXPECT_EQ(kv.at("name"), "a # b");
    EXPECT_THROW(parse_key_values("model ba\n"), ParseError);
    EXPECT_THROW(parse_key_values("= 3\n"), ParseError);
}

TEST(Config, Lists) {
    EXPECT_EQ(parse_list("[0.1, 0.2 ,0.3]"), (std::vector<std::string>{"0.1", "0.2", "0.3"}));
    EXPECT_EQ(parse_list("1,2"), (std::vector<std::string>{"1", "2"}));
    EXPECT_TRUE(parse_list("[]").empty());
    EXPECT_THROW(parse_list("[1, 2"), ParseError);
}

// Optional: set EGOCS_FACEBOOK_EDGES to the ego-Facebook edge list.
TEST(Ingestion, FacebookSmoke) {
    const char *path = std::getenv("EGOCS_FACEBOOK_EDGES");
    if (path == nullptr || *path == '\0') GTEST_SKIP() << "EGOCS_FACEBOOK_EDGES not set";
    std::ifstream in(path);
    ASSERT_TRUE(in) << "cannot open " << path;
    const Graph g = largest_connected_component(load_edge_list(in));
    EXPECT_EQ(g.node_count(), 1893u);
    EXPECT_EQ(g.edge_count(), 6917u);
    const auto stats = network_stats(g);
    EXPECT_FALSE(stats.sampled());
    EXPECT_GT(stats.diameter, 0u);
}

} // namespace
} // namespace egocs
