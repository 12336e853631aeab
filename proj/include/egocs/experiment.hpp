#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "egocs/config.hpp"
#include "egocs/evaluation.hpp"
#include "egocs/graph.hpp"
#include "egocs/local_metrics.hpp"
#include "egocs/measurements.hpp"
#include "egocs/recovery.hpp"

namespace egocs {

// A size given either as a count or as a fraction of |V|. Text containing a
// decimal point or exponent is a fraction in (0, 1]; plain integers are counts.
struct Quantity {
    double value = 0.0;
    bool fraction = false;
    std::string text;

    static Quantity parse(std::string_view text);
    static Quantity count(std::size_t n);
    static Quantity of_nodes(double fraction);

    // Fractions round half up: floor(value * n + 0.5).
    std::size_t resolve(std::size_t node_count) const;
};

struct GraphSpec {
    std::string model = "ba"; // ba | er | ws | file
    std::string path;         // for model == file
    std::size_t n = 500;
    std::size_t attach = 5;
    std::optional<double> p;  // ER edge probability; otherwise from avg_degree
    double avg_degree = 16.0;
    std::size_t k_nbrs = 8;
    double rewire = 0.2;
};

// Generates (or loads) the graph and keeps its largest connected component.
Graph make_graph(const GraphSpec &spec, std::uint64_t seed);

// Generator output before component extraction.
Graph generate_graph(const GraphSpec &spec, std::uint64_t seed);

struct SweepConfig {
    GraphSpec graph;
    LocalMetric metric = LocalMetric::ego;
    int h = kDefaultRadius;
    Builder builder = Builder::hiclose;
    Quantity m = Quantity::of_nodes(0.4);
    Quantity l = Quantity::of_nodes(0.25);
    Quantity k = Quantity::of_nodes(0.15);
    std::optional<double> d; // DICeNod column weight; default matches walk rows
    LassoOptions lasso;
    std::vector<std::uint64_t> seeds;
    std::string sweep_param = "none"; // none | k | m | l | lambda | d
    std::vector<std::string> values;

    // Builds a config from key-value settings; unknown keys are rejected.
    static SweepConfig from_key_values(const KeyValues &kv);
    KeyValues to_key_values() const;
    void validate() const;
};

struct RunRecord {
    std::string sweep_param;
    std::string value;
    std::uint64_t seed = 0;
    double precision = 0.0;
    double recall = 0.0;
    double f_measure = 0.0;
};

struct SweepPoint {
    std::string value;
    Summary precision;
    Summary recall;
    Summary f_measure;
};

struct ExperimentReport {
    std::vector<RunRecord> runs;   // value-major, seeds in config order
    std::vector<SweepPoint> points;
};

// Resolved parameters for one run.
struct RunParameters {
    std::size_t m = 0;
    std::size_t l = 0;
    std::size_t k = 0;
    double d = 0.0;
    LassoOptions lasso;
};

RunParameters resolve_parameters(const SweepConfig &cfg, const std::string &value, std::size_t node_count);

// The full pipeline on a prepared graph: local scores, measurements, LASSO,
// top-k of the recovery scored against the top-k of exact closeness.
RunRecord run_pipeline(const Graph &g, const NodeScores &closeness, const NodeScores &local,
                       const SweepConfig &cfg, const std::string &value, std::uint64_t seed);

MeasurementSystem build_with(Builder builder, const Graph &g, const NodeScores &scores, const RunParameters &params,
                             std::uint64_t seed);

// Runs every (value, seed) pair. With a checkpoint path, finished runs are
// appended to it as they complete and runs already recorded there are reused.
ExperimentReport run_experiment(const SweepConfig &cfg, const std::string &checkpoint_path = {});

void write_runs_csv(std::ostream &out, const std::vector<RunRecord> &runs);
std::vector<RunRecord> read_runs_csv(std::istream &in);
void write_summary_csv(std::ostream &out, const std::string &sweep_param, const std::vector<SweepPoint> &points);

inline constexpr const char *kRunsHeader = "sweep_param,value,seed,precision,recall,f_measure";

} // namespace egocs
