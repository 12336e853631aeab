#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "egocs/experiment.hpp"
#include "egocs/io.hpp"

namespace egocs {
namespace {

namespace fs = std::filesystem;

TEST(Quantity, CountsAndFractions) {
    const auto count = Quantity::parse("40");
    EXPECT_FALSE(count.fraction);
    EXPECT_EQ(count.resolve(1000), 40u);
    const auto frac = Quantity::parse("0.25");
    EXPECT_TRUE(frac.fraction);
    EXPECT_EQ(frac.resolve(500), 125u);
    // Half-up rounding, also through representation error.
    EXPECT_EQ(Quantity::parse("0.5").resolve(3), 2u);
    EXPECT_EQ(Quantity::parse("0.15").resolve(10), 2u);
    EXPECT_EQ(Quantity::parse("1.0").resolve(7), 7u);
    EXPECT_EQ(Quantity::parse("1e-1").resolve(500), 50u);
    EXPECT_THROW(Quantity::parse("1.5"), InvalidArgument);
    EXPECT_THROW(Quantity::parse("0.0"), InvalidArgument);
    EXPECT_THROW(Quantity::parse("-3"), InvalidArgument);
    EXPECT_THROW(Quantity::parse("abc"), ParseError);
    EXPECT_EQ(Quantity::of_nodes(1.0).text, "1.0");
    EXPECT_TRUE(Quantity::of_nodes(1.0).fraction);
}

TEST(SweepConfig, DefaultsAndSeeds) {
    const auto cfg = SweepConfig::from_key_values({});
    EXPECT_EQ(cfg.graph.model, "ba");
    EXPECT_EQ(cfg.seeds.size(), 10u);
    EXPECT_EQ(cfg.seeds.front(), 42u);
    EXPECT_EQ(cfg.seeds.back(), 51u);
    EXPECT_EQ(cfg.sweep_param, "none");

    const auto explicit_seeds = SweepConfig::from_key_values({{"seeds", "[3, 1, 2]"}});
    EXPECT_EQ(explicit_seeds.seeds, (std::vector<std::uint64_t>{3, 1, 2}));
    const auto master = SweepConfig::from_key_values({{"seed", "100"}, {"reps", "3"}});
    EXPECT_EQ(master.seeds, (std::vector<std::uint64_t>{100, 101, 102}));
}

TEST(SweepConfig, RoundTripsThroughKeyValues) {
    const KeyValues kv{{"model", "ws"}, {"n", "300"}, {"k_nbrs", "6"}, {"rewire", "0.1"}, {"metric", "daccer"},
                       {"h", "3"},      {"builder", "topcent"}, {"m", "120"}, {"l", "0.2"}, {"k", "0.1"},
                       {"lambda", "2"}, {"nonneg", "false"}, {"seeds", "[5, 6]"}, {"sweep", "m"},
                       {"values", "[0.2, 0.4]"}};
    const auto cfg = SweepConfig::from_key_values(kv);
    const auto again = SweepConfig::from_key_values(cfg.to_key_values());
    EXPECT_EQ(again.to_key_values(), cfg.to_key_values());
    EXPECT_EQ(again.graph.model, "ws");
    EXPECT_EQ(again.metric, LocalMetric::daccer);
    EXPECT_EQ(again.builder, Builder::topcent);
    EXPECT_FALSE(again.lasso.nonneg);
    EXPECT_EQ(again.values, (std::vector<std::string>{"0.2", "0.4"}));
}

TEST(SweepConfig, RejectsInvalidSettings) {
    EXPECT_THROW(SweepConfig::from_key_values({{"colour", "blue"}}), InvalidArgument);
    EXPECT_THROW(SweepConfig::from_key_values({{"n", "12.5"}}), InvalidArgument);
    EXPECT_THROW(SweepConfig::from_key_values({{"sweep", "beta"}, {"values", "1"}}), InvalidArgument);
    EXPECT_THROW(SweepConfig::from_key_values({{"sweep", "l"}}), InvalidArgument);
    EXPECT_THROW(SweepConfig::from_key_values({{"sweep", "l"}, {"values", "[0.1, 7.5]"}}), InvalidArgument);
    EXPECT_THROW(SweepConfig::from_key_values({{"lambda", "0"}}), InvalidArgument);
    EXPECT_THROW(SweepConfig::from_key_values({{"nonneg", "maybe"}}), InvalidArgument);
    EXPECT_THROW(SweepConfig::from_key_values({{"reps", "0"}}), InvalidArgument);
}

TEST(ResolveParameters, SweptValueOverrides) {
    SweepConfig cfg;
    cfg.seeds = {1};
    cfg.sweep_param = "l";
    cfg.values = {"0.1", "50"};
    const auto a = resolve_parameters(cfg, "0.1", 500);
    EXPECT_EQ(a.l, 50u);
    EXPECT_EQ(a.m, 200u);
    EXPECT_EQ(a.k, 75u);
    EXPECT_DOUBLE_EQ(a.d, 51.0 * 200.0 / 500.0);
    EXPECT_EQ(resolve_parameters(cfg, "50", 500).l, 50u);
    cfg.sweep_param = "lambda";
    EXPECT_DOUBLE_EQ(resolve_parameters(cfg, "2.5", 500).lasso.lambda, 2.5);
}

SweepConfig small_config() {
    SweepConfig cfg;
    cfg.graph.n = 120;
    cfg.graph.attach = 3;
    cfg.seeds = {1, 2, 3};
    cfg.sweep_param = "m";
    cfg.values = {"0.3", "0.5"};
    return cfg;
}

TEST(RunExperiment, DeterministicAndValueMajor) {
    const auto cfg = small_config();
    const auto a = run_experiment(cfg);
    const auto b = run_experiment(cfg);
    ASSERT_EQ(a.runs.size(), 6u);
    ASSERT_EQ(a.points.size(), 2u);
    std::ostringstream ra, rb;
    write_runs_csv(ra, a.runs);
    write_runs_csv(rb, b.runs);
    EXPECT_EQ(ra.str(), rb.str());
    EXPECT_EQ(a.runs[0].value, "0.3");
    EXPECT_EQ(a.runs[0].seed, 1u);
    EXPECT_EQ(a.runs[3].value, "0.5");
    for (const auto &r : a.runs) {
        EXPECT_GE(r.precision, 0.0);
        EXPECT_LE(r.precision, 1.0);
        // |detected| = |truth| = k, so precision and recall coincide.
        EXPECT_DOUBLE_EQ(r.precision, r.recall);
    }
}

TEST(RunExperiment, MatchesSingleRunPipeline) {
    const auto cfg = small_config();
    const auto report = run_experiment(cfg);
    const Graph g = make_graph(cfg.graph, 2);
    const auto rec = run_pipeline(g, closeness_exact(g), compute_local_metric(g, cfg.metric, cfg.h), cfg, "0.5", 2);
    EXPECT_EQ(report.runs[4].seed, 2u);
    EXPECT_EQ(report.runs[4].f_measure, rec.f_measure);
}

TEST(RunExperiment, CheckpointResumeGivesSameReport) {
    const auto dir = fs::temp_directory_path() / "egocs_checkpoint_test";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const auto path = (dir / "runs.csv").string();
    auto cfg = small_config();
    const auto full = run_experiment(cfg);

    // A first pass over fewer seeds leaves a partial checkpoint.
    auto partial = cfg;
    partial.seeds = {1, 3};
    run_experiment(partial, path);
    {
        std::ifstream in(path);
        EXPECT_EQ(read_runs_csv(in).size(), 4u);
    }
    const auto resumed = run_experiment(cfg, path);
    std::ostringstream a, b;
    write_runs_csv(a, full.runs);
    write_runs_csv(b, resumed.runs);
    EXPECT_EQ(a.str(), b.str());
    std::ifstream in(path);
    EXPECT_EQ(read_runs_csv(in).size(), 6u);
    fs::remove_all(dir);
}

TEST(RunsCsv, RoundTripAndTornTail) {
    std::vector<RunRecord> runs{{"l", "0.1", 4, 0.5, 0.5, 0.5}, {"l", "0.35", 4, 2.0 / 3, 2.0 / 3, 2.0 / 3}};
    std::stringstream buf;
    write_runs_csv(buf, runs);
    const auto back = read_runs_csv(buf);
    ASSERT_EQ(back.size(), 2u);
    EXPECT_EQ(back[1].precision, 2.0 / 3);
    std::istringstream torn(std::string(kRunsHeader) + "\nl,0.1,4,0.5,0.5,0.5\nl,0.35,4,0.6");
    EXPECT_EQ(read_runs_csv(torn).size(), 1u);
    std::istringstream broken(std::string(kRunsHeader) + "\nl,0.1\nl,0.35,4,0.5,0.5,0.5\n");
    EXPECT_THROW(read_runs_csv(broken), ParseError);
}

TEST(Summary, CsvColumns) {
    std::vector<SweepPoint> pts(1);
    pts[0].value = "-";
    pts[0].f_measure.mean = 0.5;
    std::ostringstream out;
    write_summary_csv(out, "none", pts);
    const auto text = out.str();
    EXPECT_EQ(text.substr(0, text.find('\n')),
              "sweep_param,value,precision_mean,precision_std_lo,precision_std_hi,recall_mean,recall_std_lo,"
              "recall_std_hi,f_measure_mean,f_measure_std_lo,f_measure_std_hi");
    EXPECT_NE(text.find("none,-,0,0,0,0,0,0,0.5,0,0"), std::string::npos);
}

} // namespace
} // namespace egocs
