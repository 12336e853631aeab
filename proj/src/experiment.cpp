#include "egocs/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>

#include "egocs/generators.hpp"
#include "egocs/io.hpp"
#include "egocs/parallel.hpp"

namespace egocs {

Quantity Quantity::parse(std::string_view text) {
    Quantity q;
    q.text = std::string(text);
    q.fraction = text.find_first_of(".eE") != std::string_view::npos;
    q.value = io::parse_double(text);
    if (q.fraction) {
        if (!(q.value > 0.0 && q.value <= 1.0)) {
            throw InvalidArgument("fraction of |V| must lie in (0, 1], got '" + q.text + "'");
        }
    } else if (q.value < 0.0 || q.value != std::floor(q.value)) {
        throw InvalidArgument("count must be a non-negative integer, got '" + q.text + "'");
    }
    return q;
}

Quantity Quantity::count(std::size_t n) { return parse(std::to_string(n)); }

Quantity Quantity::of_nodes(double fraction) {
    std::string text = io::format_double(fraction);
    if (text.find_first_of(".eE") == std::string::npos) text += ".0";
    return parse(text);
}

std::size_t Quantity::resolve(std::size_t node_count) const {
    if (!fraction) return static_cast<std::size_t>(value);
    // The small offset keeps exact halves like 0.5 * 3 from rounding down
    // through representation error.
    return static_cast<std::size_t>(std::floor(value * static_cast<double>(node_count) + 0.5 + 1e-9));
}

Graph generate_graph(const GraphSpec &spec, std::uint64_t seed) {
    if (spec.model == "ba") return gen_ba(spec.n, spec.attach, seed);
    if (spec.model == "er") {
        return spec.p ? gen_er(spec.n, *spec.p, seed) : gen_er_avg_degree(spec.n, spec.avg_degree, seed);
    }
    if (spec.model == "ws") return gen_ws(spec.n, spec.k_nbrs, spec.rewire, seed);
    if (spec.model == "file") {
        std::ifstream in(spec.path);
        if (!in) throw Error("cannot open graph file '" + spec.path + "'");
        return load_edge_list(in);
    }
    throw InvalidArgument("unknown graph model '" + spec.model + "' (expected ba, er, ws, file)");
}

Graph make_graph(const GraphSpec &spec, std::uint64_t seed) {
    return largest_connected_component(generate_graph(spec, seed));
}

namespace {

template <class T>
T parse_number(const std::string &key, const std::string &text) {
    double v = 0.0;
    try {
        v = io::parse_double(text);
    } catch (const ParseError &) {
        throw InvalidArgument("config key '" + key + "': not a number: '" + text + "'");
    }
    if constexpr (std::is_integral_v<T>) {
        if (v < 0.0 || v != std::floor(v)) throw InvalidArgument("config key '" + key + "' must be a non-negative integer");
        return static_cast<T>(v);
    } else {
        return static_cast<T>(v);
    }
}

bool parse_bool(const std::string &key, const std::string &text) {
    if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
    if (text == "false" || text == "0" || text == "no" || text == "off") return false;
    throw InvalidArgument("config key '" + key + "' must be a boolean");
}

} // namespace

SweepConfig SweepConfig::from_key_values(const KeyValues &kv) {
    SweepConfig cfg;
    std::uint64_t master = 42;
    std::size_t reps = 10;
    bool explicit_seeds = false;
    for (const auto &[key, value] : kv) {
        if (key == "model") cfg.graph.model = value;
        else if (key == "graph") {
            cfg.graph.model = "file";
            cfg.graph.path = value;
        } else if (key == "n") cfg.graph.n = parse_number<std::size_t>(key, value);
        else if (key == "p") cfg.graph.p = parse_number<double>(key, value);
        else if (key == "avg_deg") cfg.graph.avg_degree = parse_number<double>(key, value);
        else if (key == "attach") cfg.graph.attach = parse_number<std::size_t>(key, value);
        else if (key == "k_nbrs") cfg.graph.k_nbrs = parse_number<std::size_t>(key, value);
        else if (key == "rewire") cfg.graph.rewire = parse_number<double>(key, value);
        else if (key == "metric") cfg.metric = parse_local_metric(value);
        else if (key == "h") cfg.h = parse_number<int>(key, value);
        else if (key == "builder") cfg.builder = parse_builder(value);
        else if (key == "m") cfg.m = Quantity::parse(value);
        else if (key == "l") cfg.l = Quantity::parse(value);
        else if (key == "k") cfg.k = Quantity::parse(value);
        else if (key == "d") cfg.d = parse_number<double>(key, value);
        else if (key == "lambda") cfg.lasso.lambda = parse_number<double>(key, value);
        else if (key == "nonneg") cfg.lasso.nonneg = parse_bool(key, value);
        else if (key == "tol") cfg.lasso.tol = parse_number<double>(key, value);
        else if (key == "max_iter") cfg.lasso.max_iter = parse_number<std::size_t>(key, value);
        else if (key == "seed") master = parse_number<std::uint64_t>(key, value);
        else if (key == "reps") reps = parse_number<std::size_t>(key, value);
        else if (key == "seeds") {
            explicit_seeds = true;
            for (const auto &s : parse_list(value)) cfg.seeds.push_back(parse_number<std::uint64_t>(key, s));
        } else if (key == "sweep") cfg.sweep_param = value;
        else if (key == "values") cfg.values = parse_list(value);
        else throw InvalidArgument("unknown config key '" + key + "'");
    }
    if (!explicit_seeds) {
        for (std::size_t r = 0; r < reps; ++r) cfg.seeds.push_back(master + r);
    }
    cfg.validate();
    return cfg;
}

KeyValues SweepConfig::to_key_values() const {
    KeyValues kv;
    kv["model"] = graph.model;
    if (graph.model == "file") kv["graph"] = graph.path;
    kv["n"] = std::to_string(graph.n);
    if (graph.p) kv["p"] = io::format_double(*graph.p);
    kv["avg_deg"] = io::format_double(graph.avg_degree);
    kv["attach"] = std::to_string(graph.attach);
    kv["k_nbrs"] = std::to_string(graph.k_nbrs);
    kv["rewire"] = io::format_double(graph.rewire);
    kv["metric"] = std::string(to_string(metric));
    kv["h"] = std::to_string(h);
    kv["builder"] = std::string(to_string(builder));
    kv["m"] = m.text;
    kv["l"] = l.text;
    kv["k"] = k.text;
    if (d) kv["d"] = io::format_double(*d);
    kv["lambda"] = io::format_double(lasso.lambda);
    kv["nonneg"] = lasso.nonneg ? "true" : "false";
    kv["tol"] = io::format_double(lasso.tol);
    kv["max_iter"] = std::to_string(lasso.max_iter);
    std::string seed_list = "[";
    for (std::size_t i = 0; i < seeds.size(); ++i) seed_list += (i ? ", " : "") + std::to_string(seeds[i]);
    kv["seeds"] = seed_list + "]";
    kv["sweep"] = sweep_param;
    if (!values.empty()) {
        std::string list = "[";
        for (std::size_t i = 0; i < values.size(); ++i) list += (i ? ", " : "") + values[i];
        kv["values"] = list + "]";
    }
    return kv;
}

void SweepConfig::validate() const {
    if (seeds.empty()) throw InvalidArgument("sweep config needs at least one seed");
    if (h < 1) throw InvalidArgument("h must be >= 1");
    if (!(lasso.lambda > 0.0)) throw InvalidArgument("lambda must be positive");
    static const std::vector<std::string> params{"none", "k", "m", "l", "lambda", "d"};
    if (std::find(params.begin(), params.end(), sweep_param) == params.end()) {
        throw InvalidArgument("unknown sweep parameter '" + sweep_param + "' (expected none, k, m, l, lambda, d)");
    }
    if (sweep_param != "none" && values.empty()) throw InvalidArgument("sweep over '" + sweep_param + "' needs values");
    for (const auto &v : values) {
        if (sweep_param == "k" || sweep_param == "m" || sweep_param == "l") Quantity::parse(v);
        else if (sweep_param != "none") io::parse_double(v);
    }
}

RunParameters resolve_parameters(const SweepConfig &cfg, const std::string &value, std::size_t node_count) {
    Quantity m = cfg.m;
    Quantity l = cfg.l;
    Quantity k = cfg.k;
    std::optional<double> d = cfg.d;
    RunParameters params;
    params.lasso = cfg.lasso;
    if (cfg.sweep_param == "k") k = Quantity::parse(value);
    else if (cfg.sweep_param == "m") m = Quantity::parse(value);
    else if (cfg.sweep_param == "l") l = Quantity::parse(value);
    else if (cfg.sweep_param == "lambda") params.lasso.lambda = io::parse_double(value);
    else if (cfg.sweep_param == "d") d = io::parse_double(value);

    params.m = std::max<std::size_t>(1, m.resolve(node_count));
    params.l = l.resolve(node_count);
    params.k = std::clamp<std::size_t>(k.resolve(node_count), 1, node_count);
    params.d = d ? *d : dicenod_d_for_row_size(node_count, params.m, static_cast<double>(params.l + 1));
    return params;
}

MeasurementSystem build_with(Builder builder, const Graph &g, const NodeScores &scores, const RunParameters &params,
                             std::uint64_t seed) {
    switch (builder) {
    case Builder::hiclose: return build_matrix(g, scores, params.m, params.l, seed);
    case Builder::rw: return build_matrix_rw(g, scores, params.m, params.l, seed);
    case Builder::topcent: return build_matrix_topcent(g, scores, params.m, params.l, seed);
    case Builder::dicenod: return build_matrix_dicenod(g, scores, params.m, params.d, seed);
    }
    throw InvalidArgument("unknown builder");
}

RunRecord run_pipeline(const Graph &g, const NodeScores &closeness, const NodeScores &local, const SweepConfig &cfg,
                       const std::string &value, std::uint64_t seed) {
    const auto params = resolve_parameters(cfg, value, g.node_count());
    const auto truth = top_k_nodes(closeness.values(), params.k);
    const auto ms = build_with(cfg.builder, g, local, params, seed);
    const auto recovery = lasso_solve(ms, params.lasso);
    const auto detected = top_k_nodes(recovery.x_hat, params.k);
    const auto pr = precision_recall(detected, truth);
    RunRecord rec;
    rec.sweep_param = cfg.sweep_param;
    rec.value = value;
    rec.seed = seed;
    rec.precision = pr.precision;
    rec.recall = pr.recall;
    rec.f_measure = f_measure(pr.precision, pr.recall);
    return rec;
}

namespace {

struct Prepared {
    Graph graph;
    NodeScores closeness;
    NodeScores local;
};

std::string run_line(const RunRecord &r) {
    std::ostringstream os;
    os << r.sweep_param << ',' << r.value << ',' << r.seed << ',' << io::format_double(r.precision) << ','
       << io::format_double(r.recall) << ',' << io::format_double(r.f_measure) << '\n';
    return os.str();
}

} // namespace

ExperimentReport run_experiment(const SweepConfig &cfg, const std::string &checkpoint_path) {
    cfg.validate();
    const std::vector<std::string> values =
        cfg.sweep_param == "none" ? std::vector<std::string>{"-"} : cfg.values;

    std::map<std::pair<std::string, std::uint64_t>, RunRecord> done;
    if (!checkpoint_path.empty()) {
        std::ifstream in(checkpoint_path);
        if (in) {
            for (auto &rec : read_runs_csv(in)) {
                if (rec.sweep_param == cfg.sweep_param) done[{rec.value, rec.seed}] = rec;
            }
        }
    }

    const std::size_t n_seeds = cfg.seeds.size();
    std::vector<bool> seed_needed(n_seeds, false);
    std::vector<std::pair<std::size_t, std::size_t>> tasks;
    for (std::size_t vi = 0; vi < values.size(); ++vi) {
        for (std::size_t si = 0; si < n_seeds; ++si) {
            if (!done.contains({values[vi], cfg.seeds[si]})) {
                tasks.emplace_back(vi, si);
                seed_needed[si] = true;
            }
        }
    }

    auto prepare = [&](std::uint64_t seed) {
        auto p = std::make_shared<Prepared>();
        p->graph = make_graph(cfg.graph, seed);
        p->closeness = closeness_exact(p->graph);
        p->local = compute_local_metric(p->graph, cfg.metric, cfg.h);
        return std::shared_ptr<const Prepared>(std::move(p));
    };
    std::vector<std::shared_ptr<const Prepared>> prepared(n_seeds);
    if (cfg.graph.model == "file") {
        // The graph does not depend on the seed.
        if (!tasks.empty()) {
            auto shared = prepare(0);
            for (std::size_t si = 0; si < n_seeds; ++si) prepared[si] = shared;
        }
    } else {
        parallel_for(n_seeds, [&](std::size_t si) {
            if (seed_needed[si]) prepared[si] = prepare(cfg.seeds[si]);
        });
    }

    std::unique_ptr<std::ofstream> checkpoint;
    if (!checkpoint_path.empty() && !tasks.empty()) {
        const bool fresh = done.empty() && !std::ifstream(checkpoint_path).good();
        checkpoint = std::make_unique<std::ofstream>(checkpoint_path, std::ios::app);
        if (!*checkpoint) throw Error("cannot write checkpoint '" + checkpoint_path + "'");
        if (fresh) *checkpoint << kRunsHeader << '\n' << std::flush;
    }
    std::mutex checkpoint_mutex;
    std::vector<RunRecord> fresh_runs(tasks.size());
    parallel_for(tasks.size(), [&](std::size_t t) {
        const auto [vi, si] = tasks[t];
        const auto &prep = *prepared[si];
        fresh_runs[t] = run_pipeline(prep.graph, prep.closeness, prep.local, cfg, values[vi], cfg.seeds[si]);
        if (checkpoint) {
            std::lock_guard lock(checkpoint_mutex);
            *checkpoint << run_line(fresh_runs[t]) << std::flush;
        }
    });
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        done[{values[tasks[t].first], cfg.seeds[tasks[t].second]}] = fresh_runs[t];
    }

    ExperimentReport report;
    for (const auto &value : values) {
        std::vector<double> p;
        std::vector<double> r;
        std::vector<double> f;
        for (auto seed : cfg.seeds) {
            const auto &rec = done.at({value, seed});
            report.runs.push_back(rec);
            p.push_back(rec.precision);
            r.push_back(rec.recall);
            f.push_back(rec.f_measure);
        }
        report.points.push_back({value, summarize(p), summarize(r), summarize(f)});
    }
    return report;
}

void write_runs_csv(std::ostream &out, const std::vector<RunRecord> &runs) {
    out << kRunsHeader << '\n';
    for (const auto &r : runs) out << run_line(r);
}

std::vector<RunRecord> read_runs_csv(std::istream &in) {
    std::vector<RunRecord> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line == kRunsHeader) continue;
        std::vector<std::string> cols;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cols.push_back(cell);
        if (cols.size() != 6) {
            // A torn final line from an interrupted run is dropped.
            if (in.peek() == std::char_traits<char>::eof()) break;
            throw ParseError("expected 6 columns in run record", line_no);
        }
        RunRecord r;
        r.sweep_param = cols[0];
        r.value = cols[1];
        try {
            r.seed = std::stoull(cols[2]);
            r.precision = io::parse_double(cols[3]);
            r.recall = io::parse_double(cols[4]);
            r.f_measure = io::parse_double(cols[5]);
        } catch (const std::exception &e) {
            throw ParseError(std::string("bad run record: ") + e.what(), line_no);
        }
        out.push_back(std::move(r));
    }
    return out;
}

void write_summary_csv(std::ostream &out, const std::string &sweep_param, const std::vector<SweepPoint> &points) {
    out << "sweep_param,value,precision_mean,precision_std_lo,precision_std_hi,recall_mean,recall_std_lo,"
           "recall_std_hi,f_measure_mean,f_measure_std_lo,f_measure_std_hi\n";
    for (const auto &pt : points) {
        out << sweep_param << ',' << pt.value;
        for (const Summary *s : {&pt.precision, &pt.recall, &pt.f_measure}) {
            out << ',' << io::format_double(s->mean) << ',' << io::format_double(s->std_lo) << ','
                << io::format_double(s->std_hi);
        }
        out << '\n';
    }
}

} // namespace egocs
