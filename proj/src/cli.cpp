#include "egocs/cli.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "egocs/experiment.hpp"
#include "egocs/generators.hpp"
#include "egocs/io.hpp"
#include "egocs/kernels.hpp"

namespace egocs::cli {

namespace {

constexpr const char *kVersion = "1.0.0";

class UsageError : public Error {
public:
    using Error::Error;
};

using Json = nlohmann::ordered_json;

std::string timestamp() {
    std::time_t t = 0;
    if (const char *epoch = std::getenv("SOURCE_DATE_EPOCH")) {
        t = static_cast<std::time_t>(std::stoll(epoch));
    } else {
        t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    }
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

std::string require_file(const std::string &path, const char *what) {
    if (path.empty()) throw UsageError(std::string("missing ") + what);
    if (!std::filesystem::is_regular_file(path)) throw UsageError(std::string(what) + " '" + path + "' not found");
    return io::read_file(path);
}

// Collects artifacts of one invocation and writes its manifest.
class Session {
public:
    Session(std::string subcommand, const std::vector<std::string> &args, std::ostream &out)
        : subcommand_(std::move(subcommand)), args_(args), out_(out) {}

    std::string read_input(const std::string &path, const char *what) {
        auto text = require_file(path, what);
        inputs_[path] = io::digest(text);
        return text;
    }

    Graph load_graph(const std::string &path) {
        std::istringstream in(read_input(path, "graph file"));
        try {
            return largest_connected_component(load_edge_list(in));
        } catch (const ParseError &e) {
            throw UsageError("graph file '" + path + "': " + e.what());
        }
    }

    // Writes to `path`, or to stdout when path is empty.
    void emit(const std::string &path, const std::string &contents) {
        if (path.empty()) {
            out_ << contents;
            return;
        }
        io::write_file(path, contents);
        outputs_[path] = io::digest(contents);
    }

    Json &config() { return config_; }

    void finish(const std::string &primary_output, std::uint64_t seed) {
        if (primary_output.empty()) return;
        Json manifest;
        manifest["command"] = args_;
        manifest["subcommand"] = subcommand_;
        manifest["config"] = config_;
        manifest["seed"] = seed;
        manifest["versions"] = {{"egocs", kVersion}, {"kernels", std::string(kernels::to_string(kernels::active().isa))}};
        manifest["inputs"] = inputs_;
        manifest["outputs"] = outputs_;
        manifest["timestamp"] = timestamp();
        io::write_file(primary_output + ".manifest.json", manifest.dump(2) + "\n");
    }

private:
    std::string subcommand_;
    std::vector<std::string> args_;
    std::ostream &out_;
    Json config_ = Json::object();
    std::map<std::string, std::string> inputs_;
    std::map<std::string, std::string> outputs_;
};

Quantity parse_quantity(const std::string &text, const char *flag) {
    try {
        return Quantity::parse(text);
    } catch (const Error &e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

struct Options {
    // gen / graph
    std::string model = "ba";
    std::size_t n = 500;
    std::size_t attach = 5;
    double p = 0.0;
    double avg_deg = 16.0;
    std::size_t k_nbrs = 8;
    double rewire = 0.2;
    std::uint64_t seed = 42;
    std::string graph;
    std::string output;
    // stats
    std::size_t max_sources = kExactStatsLimit;
    // metric / measure
    std::string metric = "ego";
    int h = kDefaultRadius;
    std::string scores;
    std::string builder = "hiclose";
    std::string m = "0.4";
    std::string l = "0.25";
    std::string k = "0.15";
    double d = 0.0;
    // recover
    std::string matrix;
    std::string summary;
    double lambda = 1.0;
    bool nonneg = true;
    double tol = 1e-8;
    std::size_t max_iter = 100'000;
    // eval
    std::string recovered;
    // sweep
    std::string config;
    std::size_t reps = 10;
    std::string sweep_param;
    std::string values;
    std::string checkpoint;
};

void add_graph_model_flags(CLI::App *cmd, Options &o) {
    cmd->add_option("--model", o.model, "Graph model")->check(CLI::IsMember({"ba", "er", "ws"}));
    cmd->add_option("--n", o.n, "Number of nodes");
    cmd->add_option("--attach", o.attach, "BA: edges per new node");
    cmd->add_option("--p", o.p, "ER: edge probability (overrides --avg-deg)");
    cmd->add_option("--avg-deg", o.avg_deg, "ER: target average degree");
    cmd->add_option("--k-nbrs", o.k_nbrs, "WS: lattice degree (even)");
    cmd->add_option("--rewire", o.rewire, "WS: rewiring probability");
}

GraphSpec graph_spec(const Options &o, const CLI::App *cmd) {
    GraphSpec spec;
    spec.model = o.model;
    spec.n = o.n;
    spec.attach = o.attach;
    if (cmd->count("--p") > 0) spec.p = o.p;
    spec.avg_degree = o.avg_deg;
    spec.k_nbrs = o.k_nbrs;
    spec.rewire = o.rewire;
    return spec;
}

NodeScores local_scores(const Graph &g, const std::string &metric, int h) {
    if (metric == "closeness") return closeness_exact(g);
    return compute_local_metric(g, parse_local_metric(metric), h);
}

int cmd_gen(Session &s, const Options &o, const CLI::App *cmd) {
    const auto spec = graph_spec(o, cmd);
    const Graph g = generate_graph(spec, o.seed);
    std::ostringstream os;
    write_edge_list(os, g);
    s.config() = {{"model", spec.model}, {"n", spec.n}, {"attach", spec.attach}, {"avg_deg", spec.avg_degree},
                  {"k_nbrs", spec.k_nbrs}, {"rewire", spec.rewire}};
    if (spec.p) s.config()["p"] = *spec.p;
    s.emit(o.output, os.str());
    s.finish(o.output, o.seed);
    return kExitOk;
}

int cmd_stats(Session &s, const Options &o) {
    const Graph g = s.load_graph(o.graph);
    const auto stats = network_stats(g, o.max_sources, o.seed);
    std::ostringstream os;
    io::write_stats(os, stats);
    s.config() = {{"max_sources", o.max_sources}, {"bfs_sources", stats.bfs_sources}, {"sampled", stats.sampled()}};
    s.emit(o.output, os.str());
    s.finish(o.output, o.seed);
    return kExitOk;
}

int cmd_metric(Session &s, const Options &o) {
    const Graph g = s.load_graph(o.graph);
    const auto scores = local_scores(g, o.metric, o.h);
    std::ostringstream os;
    io::write_node_values(os, io::LabelIndex(g.labels()), scores.values(), "score");
    s.config() = {{"metric", o.metric}, {"h", o.h}};
    s.emit(o.output, os.str());
    s.finish(o.output, o.seed);
    return kExitOk;
}

int cmd_measure(Session &s, const Options &o, const CLI::App *cmd) {
    const Graph g = s.load_graph(o.graph);
    const io::LabelIndex labels(g.labels());
    NodeScores scores;
    if (!o.scores.empty()) {
        std::istringstream in(s.read_input(o.scores, "score file"));
        try {
            scores = NodeScores(io::read_node_values(in, labels));
        } catch (const Error &e) {
            throw UsageError("score file '" + o.scores + "': " + e.what());
        }
    } else {
        scores = local_scores(g, o.metric, o.h);
    }
    SweepConfig cfg;
    cfg.builder = parse_builder(o.builder);
    cfg.m = parse_quantity(o.m, "--m");
    cfg.l = parse_quantity(o.l, "--l");
    if (cmd->count("--d") > 0) cfg.d = o.d;
    const auto params = resolve_parameters(cfg, "-", g.node_count());
    const auto ms = build_with(cfg.builder, g, scores, params, o.seed);

    io::MatrixSidecar meta;
    meta.m = params.m;
    meta.l = cfg.builder == Builder::dicenod ? 0 : params.l;
    meta.seed = o.seed;
    meta.builder = o.builder;
    meta.score_metric = o.metric;
    meta.h = o.h;
    meta.nodes = g.node_count();
    if (cfg.builder == Builder::dicenod) meta.d = params.d;

    const auto feasibility = verify_feasibility(g, ms);
    s.config() = Json::parse(io::sidecar_json(meta));
    s.config()["feasible_fraction"] = feasibility.fraction;
    s.config()["scores"] = o.scores;

    std::ostringstream os;
    io::write_measurements(os, ms, labels);
    s.emit(o.output, os.str());
    if (!o.output.empty()) s.emit(o.output + ".json", io::sidecar_json(meta));
    s.finish(o.output, o.seed);
    return kExitOk;
}

int cmd_recover(Session &s, const Options &o) {
    const std::string matrix_text = s.read_input(o.matrix, "matrix file");
    const std::string sidecar_path = o.matrix + ".json";
    io::MatrixSidecar meta;
    std::optional<io::LabelIndex> labels;
    if (std::filesystem::is_regular_file(sidecar_path)) {
        try {
            meta = io::parse_sidecar(s.read_input(sidecar_path, "matrix sidecar"));
        } catch (const ParseError &e) {
            throw UsageError(e.what());
        }
    }
    if (!o.graph.empty()) {
        labels.emplace(s.load_graph(o.graph).labels());
    } else if (meta.nodes > 0) {
        labels = io::LabelIndex::identity(meta.nodes);
    } else {
        throw UsageError("recover needs the matrix sidecar (<matrix>.json) or --graph to know the node set");
    }
    MeasurementSystem ms;
    try {
        std::istringstream in(matrix_text);
        ms = io::read_measurements(in, *labels, meta.l);
    } catch (const ParseError &e) {
        std::string hint = o.graph.empty() ? " (pass --graph when node ids are not 0..n-1)" : "";
        throw UsageError("matrix file '" + o.matrix + "': " + e.what() + hint);
    }
    LassoOptions opts;
    opts.lambda = o.lambda;
    opts.nonneg = o.nonneg;
    opts.tol = o.tol;
    opts.max_iter = o.max_iter;
    const auto result = lasso_solve(ms, opts);

    std::ostringstream os;
    io::write_node_values(os, *labels, result.x_hat, "value");
    Json summary;
    summary["objective"] = result.objective;
    summary["iterations"] = result.iterations;
    summary["converged"] = result.converged;
    summary["kkt_residual"] = kkt_residual(ms, result.x_hat, opts.lambda, opts.nonneg);
    s.config() = {{"lambda", opts.lambda}, {"nonneg", opts.nonneg}, {"tol", opts.tol}, {"max_iter", opts.max_iter}};
    s.emit(o.output, os.str());
    const std::string summary_path = !o.summary.empty() ? o.summary : (o.output.empty() ? "" : o.output + ".summary.json");
    if (!summary_path.empty()) s.emit(summary_path, summary.dump(2) + "\n");
    s.finish(o.output, meta.seed);
    return kExitOk;
}

int cmd_eval(Session &s, const Options &o) {
    const Graph g = s.load_graph(o.graph);
    const io::LabelIndex labels(g.labels());
    const auto k_quantity = parse_quantity(o.k, "--k");
    const std::size_t k = std::clamp<std::size_t>(k_quantity.resolve(g.node_count()), 1, g.node_count());
    const auto closeness = closeness_exact(g);
    auto read_values = [&](const std::string &path, const char *what) {
        std::istringstream in(s.read_input(path, what));
        try {
            return io::read_node_values(in, labels);
        } catch (const ParseError &e) {
            throw UsageError(std::string(what) + " '" + path + "': " + e.what());
        }
    };
    std::ostringstream os;
    if (!o.recovered.empty()) {
        const auto x_hat = read_values(o.recovered, "recovered vector");
        const auto truth = top_k_nodes(closeness.values(), k);
        const auto detected = top_k_nodes(x_hat, k);
        const auto pr = precision_recall(detected, truth);
        RunRecord rec{"none", "-", o.seed, pr.precision, pr.recall, f_measure(pr.precision, pr.recall)};
        write_runs_csv(os, {rec});
    } else if (!o.scores.empty()) {
        const auto local = read_values(o.scores, "score file");
        const auto log = log_pearson(local, closeness.values(), true);
        os << "k,pearson,topk_pearson,log_pearson,log_shifted\n"
           << k << ',' << io::format_double(pearson(local, closeness.values())) << ','
           << io::format_double(topk_pearson(local, closeness.values(), k)) << ',' << io::format_double(log.value)
           << ',' << (log.shifted ? "true" : "false") << '\n';
    } else {
        throw UsageError("eval needs --recovered or --scores");
    }
    s.config() = {{"k", o.k}, {"k_resolved", k}};
    s.emit(o.output, os.str());
    s.finish(o.output, o.seed);
    return kExitOk;
}

int cmd_sweep(Session &s, const Options &o, const CLI::App *cmd) {
    KeyValues kv;
    if (!o.config.empty()) {
        try {
            kv = parse_key_values(s.read_input(o.config, "config file"));
        } catch (const ParseError &e) {
            throw UsageError("config file '" + o.config + "': " + e.what());
        }
    }
    auto set_if = [&](const char *flag, const char *key, const std::string &value) {
        if (cmd->count(flag) > 0) kv[key] = value;
    };
    set_if("--graph", "graph", o.graph);
    set_if("--model", "model", o.model);
    set_if("--n", "n", std::to_string(o.n));
    set_if("--attach", "attach", std::to_string(o.attach));
    set_if("--p", "p", io::format_double(o.p));
    set_if("--avg-deg", "avg_deg", io::format_double(o.avg_deg));
    set_if("--k-nbrs", "k_nbrs", std::to_string(o.k_nbrs));
    set_if("--rewire", "rewire", io::format_double(o.rewire));
    set_if("--metric", "metric", o.metric);
    set_if("--h", "h", std::to_string(o.h));
    set_if("--builder", "builder", o.builder);
    set_if("--m", "m", o.m);
    set_if("--l", "l", o.l);
    set_if("--k", "k", o.k);
    set_if("--d", "d", io::format_double(o.d));
    set_if("--lambda", "lambda", io::format_double(o.lambda));
    set_if("--nonneg", "nonneg", o.nonneg ? "true" : "false");
    set_if("--tol", "tol", io::format_double(o.tol));
    set_if("--max-iter", "max_iter", std::to_string(o.max_iter));
    set_if("--sweep", "sweep", o.sweep_param);
    set_if("--values", "values", o.values);
    if (cmd->count("--seed") > 0 || cmd->count("--reps") > 0) {
        // Explicit seed flags replace a seed list from the config file.
        kv.erase("seeds");
        set_if("--seed", "seed", std::to_string(o.seed));
        set_if("--reps", "reps", std::to_string(o.reps));
    }
    const auto cfg = SweepConfig::from_key_values(kv);
    if (cfg.graph.model == "file") s.read_input(cfg.graph.path, "graph file");

    const auto report = run_experiment(cfg, o.checkpoint);
    std::ostringstream runs;
    write_runs_csv(runs, report.runs);
    std::ostringstream summary;
    write_summary_csv(summary, cfg.sweep_param, report.points);

    Json config = Json::object();
    for (const auto &[key, value] : cfg.to_key_values()) config[key] = value;
    s.config() = config;
    s.emit(o.output, runs.str());
    s.emit(o.output.empty() ? "" : o.output + ".summary.csv", summary.str());
    s.finish(o.output, cfg.seeds.front());
    return kExitOk;
}

void report_error(std::ostream &err, const char *kind, const std::string &message, int code) {
    Json j;
    j["error"] = kind;
    j["message"] = message;
    j["exit_code"] = code;
    err << j.dump() << '\n';
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Options o;
    CLI::App app{"Local ego-closeness and compressive-sensing top-k closeness detection", "egocs"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    auto *gen = app.add_subcommand("gen", "Generate a synthetic graph as an edge list");
    add_graph_model_flags(gen, o);
    gen->add_option("--seed", o.seed, "Random seed");
    gen->add_option("-o,--output", o.output, "Output edge list (stdout if omitted)");

    auto *stats = app.add_subcommand("stats", "Network statistics of the largest component");
    stats->add_option("--graph", o.graph, "Edge list file")->required();
    stats->add_option("--max-sources", o.max_sources, "BFS sources before sampling kicks in");
    stats->add_option("--seed", o.seed, "Seed for sampled sources");
    stats->add_option("-o,--output", o.output, "Output CSV");

    auto *metric = app.add_subcommand("metric", "Per-node local centrality scores");
    metric->add_option("--graph", o.graph, "Edge list file")->required();
    metric->add_option("--metric", o.metric, "Score")->check(
        CLI::IsMember({"ego", "daccer", "dist-exact", "degree", "closeness"}));
    metric->add_option("--h", o.h, "Neighbourhood radius")->check(CLI::PositiveNumber);
    metric->add_option("-o,--output", o.output, "Output CSV");

    auto *measure = app.add_subcommand("measure", "Build a measurement matrix");
    measure->add_option("--graph", o.graph, "Edge list file")->required();
    measure->add_option("--scores", o.scores, "Score CSV aggregated into y (default: compute --metric)");
    measure->add_option("--metric", o.metric, "Score when --scores is absent")->check(
        CLI::IsMember({"ego", "daccer", "dist-exact", "degree", "closeness"}));
    measure->add_option("--h", o.h, "Neighbourhood radius")->check(CLI::PositiveNumber);
    measure->add_option("--builder", o.builder, "Construction")->check(
        CLI::IsMember({"hiclose", "rw", "topcent", "dicenod"}));
    measure->add_option("--m", o.m, "Measurements (count, or fraction of |V| like 0.4)");
    measure->add_option("--l", o.l, "Walk length (count, or fraction of |V|)");
    measure->add_option("--d", o.d, "dicenod: expected memberships per node");
    measure->add_option("--seed", o.seed, "Random seed");
    measure->add_option("-o,--output", o.output, "Output matrix file");

    auto *recover = app.add_subcommand("recover", "Solve the LASSO recovery problem");
    recover->add_option("--matrix", o.matrix, "Matrix file written by measure")->required();
    recover->add_option("--graph", o.graph, "Edge list (for node labels)");
    recover->add_option("--lambda", o.lambda, "L1 weight")->check(CLI::PositiveNumber);
    recover->add_flag("--nonneg,!--no-nonneg", o.nonneg, "Constrain x >= 0 (default on)");
    recover->add_option("--tol", o.tol, "Relative objective change tolerance");
    recover->add_option("--max-iter", o.max_iter, "Iteration budget");
    recover->add_option("--summary", o.summary, "JSON summary path (default <output>.summary.json)");
    recover->add_option("-o,--output", o.output, "Output CSV of the recovered vector");

    auto *eval = app.add_subcommand("eval", "Score a recovery or a local metric against exact closeness");
    eval->add_option("--graph", o.graph, "Edge list file")->required();
    eval->add_option("--recovered", o.recovered, "Recovered vector CSV (precision/recall/F-measure)");
    eval->add_option("--scores", o.scores, "Local score CSV (correlations)");
    eval->add_option("--k", o.k, "Top-k size (count or fraction of |V|)");
    eval->add_option("--seed", o.seed, "Seed recorded in the output row");
    eval->add_option("-o,--output", o.output, "Output CSV");

    auto *sweep = app.add_subcommand("sweep", "Repeated experiments over seeds and a swept parameter");
    sweep->add_option("--config", o.config, "Key-value config file");
    sweep->add_option("--graph", o.graph, "Edge list file instead of a generated model");
    add_graph_model_flags(sweep, o);
    sweep->add_option("--metric", o.metric, "Local score")->check(CLI::IsMember({"ego", "daccer", "dist-exact", "degree"}));
    sweep->add_option("--h", o.h, "Neighbourhood radius")->check(CLI::PositiveNumber);
    sweep->add_option("--builder", o.builder, "Construction")->check(
        CLI::IsMember({"hiclose", "rw", "topcent", "dicenod"}));
    sweep->add_option("--m", o.m, "Measurements");
    sweep->add_option("--l", o.l, "Walk length");
    sweep->add_option("--k", o.k, "Top-k size");
    sweep->add_option("--d", o.d, "dicenod column weight");
    sweep->add_option("--lambda", o.lambda, "L1 weight")->check(CLI::PositiveNumber);
    sweep->add_flag("--nonneg,!--no-nonneg", o.nonneg, "Constrain x >= 0 (default on)");
    sweep->add_option("--tol", o.tol, "Solver tolerance");
    sweep->add_option("--max-iter", o.max_iter, "Solver iteration budget");
    sweep->add_option("--seed", o.seed, "Master seed; repetitions use seed, seed+1, ...");
    sweep->add_option("--reps", o.reps, "Repetitions");
    sweep->add_option("--sweep", o.sweep_param, "Swept parameter: none, k, m, l, lambda, d");
    sweep->add_option("--values", o.values, "Comma-separated swept values");
    sweep->add_option("--checkpoint", o.checkpoint, "Append finished runs here and resume from it");
    sweep->add_option("-o,--output", o.output, "Per-run CSV (summary goes to <output>.summary.csv)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion &) {
        out << kVersion << '\n';
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        report_error(err, "usage", e.what(), kExitUsage);
        return kExitUsage;
    }

    CLI::App *chosen = app.get_subcommands().front();
    Session session(chosen->get_name(), args, out);
    try {
        if (chosen == gen) return cmd_gen(session, o, gen);
        if (chosen == stats) return cmd_stats(session, o);
        if (chosen == metric) return cmd_metric(session, o);
        if (chosen == measure) return cmd_measure(session, o, measure);
        if (chosen == recover) return cmd_recover(session, o);
        if (chosen == eval) return cmd_eval(session, o);
        if (chosen == sweep) return cmd_sweep(session, o, sweep);
    } catch (const UsageError &e) {
        report_error(err, "usage", e.what(), kExitUsage);
        return kExitUsage;
    } catch (const InvalidArgument &e) {
        report_error(err, "usage", e.what(), kExitUsage);
        return kExitUsage;
    } catch (const std::exception &e) {
        report_error(err, "runtime", e.what(), kExitRuntime);
        return kExitRuntime;
    }
    report_error(err, "usage", "unknown subcommand", kExitUsage);
    return kExitUsage;
}

} // namespace egocs::cli
