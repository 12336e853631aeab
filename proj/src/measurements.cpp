#include "egocs/measurements.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include "egocs/parallel.hpp"

namespace egocs {

std::size_t MeasurementSystem::nonzeros() const noexcept {
    std::size_t total = 0;
    for (const auto &row : row_supports) total += row.size();
    return total;
}

namespace {

FrontierState &thread_frontier(std::size_t node_count) {
    thread_local std::unique_ptr<FrontierState> state;
    thread_local std::size_t state_nodes = 0;
    if (!state || state_nodes != node_count) {
        state = std::make_unique<FrontierState>(node_count);
        state_nodes = node_count;
    }
    return *state;
}

void check_scores(const Graph &g, const NodeScores &scores) {
    if (scores.size() != g.node_count()) throw InvalidArgument("score vector length does not match node count");
}

double aggregate(const NodeScores &scores, std::span<const NodeId> support) {
    double y = 0.0;
    for (NodeId v : support) y += scores[v];
    return y;
}

// Frontier walk with selection weights `weights` and aggregated values `values`.
Measurement frontier_walk(const Graph &g, std::span<const double> weights, const NodeScores &values, NodeId start,
                          std::size_t l, rng::Engine &eng) {
    auto &state = thread_frontier(g.node_count());
    state.start(g, weights, start);
    double y = values[start];
    for (std::size_t step = 0; step < l && !state.frontier_empty(); ++step) {
        const NodeId next = state.draw(eng);
        state.absorb(g, weights, next);
        y += values[next];
    }
    Measurement out;
    out.support.assign(state.visited().begin(), state.visited().end());
    std::sort(out.support.begin(), out.support.end());
    out.y = y;
    return out;
}

template <class RowFn>
MeasurementSystem assemble(const Graph &g, std::size_t m, std::size_t l, RowFn &&row) {
    if (m < 1) throw InvalidArgument("number of measurements must be >= 1");
    if (g.node_count() == 0) throw InvalidArgument("cannot measure an empty graph");
    MeasurementSystem ms;
    ms.node_count = g.node_count();
    ms.walk_length = l;
    ms.row_supports.resize(m);
    ms.y.resize(m);
    parallel_for(m, [&](std::size_t i) {
        Measurement meas = row(i);
        ms.row_supports[i] = std::move(meas.support);
        ms.y[i] = meas.y;
    });
    return ms;
}

MeasurementSystem weighted_frontier_matrix(const Graph &g, std::span<const double> weights, const NodeScores &scores,
                                           std::size_t m, std::size_t l, std::uint64_t seed, std::string_view label) {
    return assemble(g, m, l, [&](std::size_t i) {
        auto eng = rng::make_engine(seed, label, i);
        const auto start = static_cast<NodeId>(rng::uniform_index(eng, g.node_count()));
        return frontier_walk(g, weights, scores, start, l, eng);
    });
}

} // namespace

Measurement build_measurement(const Graph &g, const NodeScores &scores, NodeId start, std::size_t l,
                              rng::Engine &eng) {
    check_scores(g, scores);
    if (start >= g.node_count()) throw InvalidArgument("build_measurement: start node out of range");
    return frontier_walk(g, scores.values(), scores, start, l, eng);
}

MeasurementSystem build_matrix(const Graph &g, const NodeScores &scores, std::size_t m, std::size_t l,
                               std::uint64_t seed) {
    check_scores(g, scores);
    return weighted_frontier_matrix(g, scores.values(), scores, m, l, seed, "measure-hiclose");
}

MeasurementSystem build_matrix_topcent(const Graph &g, const NodeScores &scores, std::size_t m, std::size_t l,
                                       std::uint64_t seed) {
    check_scores(g, scores);
    std::vector<double> degree(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) degree[v] = static_cast<double>(g.degree(v));
    return weighted_frontier_matrix(g, degree, scores, m, l, seed, "measure-topcent");
}

MeasurementSystem build_matrix_rw(const Graph &g, const NodeScores &scores, std::size_t m, std::size_t l,
                                  std::uint64_t seed) {
    check_scores(g, scores);
    return assemble(g, m, l, [&](std::size_t i) {
        auto eng = rng::make_engine(seed, "measure-rw", i);
        NodeId current = static_cast<NodeId>(rng::uniform_index(eng, g.node_count()));
        Measurement out;
        out.support.push_back(current);
        for (std::size_t step = 0; step < l; ++step) {
            const auto nbrs = g.neighbors(current);
            if (nbrs.empty()) break;
            current = nbrs[rng::uniform_index(eng, nbrs.size())];
            out.support.push_back(current);
        }
        std::sort(out.support.begin(), out.support.end());
        out.support.erase(std::unique(out.support.begin(), out.support.end()), out.support.end());
        out.y = aggregate(scores, out.support);
        return out;
    });
}

MeasurementSystem build_matrix_dicenod(const Graph &g, const NodeScores &scores, std::size_t m, double d,
                                       std::uint64_t seed) {
    check_scores(g, scores);
    if (!(d > 0.0 && d <= static_cast<double>(m))) {
        throw InvalidArgument("build_matrix_dicenod: requires 0 < d <= m");
    }
    const double p = d / static_cast<double>(m);
    const std::size_t n = g.node_count();
    auto ms = assemble(g, m, 0, [&](std::size_t i) {
        auto eng = rng::make_engine(seed, "measure-dicenod", i);
        Measurement out;
        if (p >= 1.0) {
            out.support.resize(n);
            for (NodeId v = 0; v < n; ++v) out.support[v] = v;
        } else {
            // Geometric gaps between successive members.
            const double log_q = std::log1p(-p);
            double pos = -1.0;
            for (;;) {
                pos += 1.0 + std::floor(std::log1p(-rng::uniform01(eng)) / log_q);
                if (pos >= static_cast<double>(n)) break;
                out.support.push_back(static_cast<NodeId>(pos));
            }
        }
        out.y = aggregate(scores, out.support);
        return out;
    });
    return ms;
}

double dicenod_d_for_row_size(std::size_t node_count, std::size_t m, double mean_row_size) {
    if (node_count == 0) throw InvalidArgument("dicenod_d_for_row_size: empty graph");
    const double d = mean_row_size * static_cast<double>(m) / static_cast<double>(node_count);
    return std::min(d, static_cast<double>(m));
}

Builder parse_builder(std::string_view name) {
    if (name == "hiclose") return Builder::hiclose;
    if (name == "rw") return Builder::rw;
    if (name == "topcent") return Builder::topcent;
    if (name == "dicenod") return Builder::dicenod;
    throw InvalidArgument("unknown builder '" + std::string(name) + "' (expected hiclose, rw, topcent, dicenod)");
}

std::string_view to_string(Builder builder) {
    switch (builder) {
    case Builder::hiclose: return "hiclose";
    case Builder::rw: return "rw";
    case Builder::topcent: return "topcent";
    case Builder::dicenod: return "dicenod";
    }
    return "unknown";
}

bool induces_connected_subgraph(const Graph &g, std::span<const NodeId> sorted_support) {
    if (sorted_support.empty()) return false;
    auto contains = [&](NodeId v) { return std::binary_search(sorted_support.begin(), sorted_support.end(), v); };
    std::vector<bool> reached(sorted_support.size(), false);
    std::vector<NodeId> stack{sorted_support.front()};
    reached[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        const NodeId u = stack.back();
        stack.pop_back();
        for (NodeId w : g.neighbors(u)) {
            if (!contains(w)) continue;
            const auto idx = static_cast<std::size_t>(
                std::lower_bound(sorted_support.begin(), sorted_support.end(), w) - sorted_support.begin());
            if (!reached[idx]) {
                reached[idx] = true;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == sorted_support.size();
}

Feasibility verify_feasibility(const Graph &g, const MeasurementSystem &ms) {
    Feasibility out;
    out.rows.resize(ms.num_measurements());
    std::size_t ok = 0;
    for (std::size_t i = 0; i < ms.num_measurements(); ++i) {
        for (NodeId v : ms.row_supports[i]) {
            if (v >= g.node_count()) throw InvalidArgument("verify_feasibility: support references unknown node");
        }
        out.rows[i] = induces_connected_subgraph(g, ms.row_supports[i]);
        if (out.rows[i]) ++ok;
    }
    out.fraction = ms.num_measurements() ? static_cast<double>(ok) / static_cast<double>(ms.num_measurements()) : 0.0;
    return out;
}

} // namespace egocs
