#include "egocs/local_metrics.hpp"

#include <string>

#include "egocs/parallel.hpp"

namespace egocs {

namespace {

// Per-thread scratch for radius-limited BFS. Visited marks are epoch stamps
// so successive searches do not pay an O(n) reset.
class BallSearch {
public:
    template <class Visit>
    void run(const Graph &g, NodeId source, int h, Visit &&visit) {
        const std::size_t n = g.node_count();
        if (stamp_.size() != n) {
            stamp_.assign(n, 0);
            epoch_ = 0;
        }
        if (++epoch_ == 0) {
            std::fill(stamp_.begin(), stamp_.end(), 0);
            epoch_ = 1;
        }
        current_.assign(1, source);
        stamp_[source] = epoch_;
        visit(source, 0);
        for (int depth = 1; depth <= h && !current_.empty(); ++depth) {
            next_.clear();
            for (NodeId u : current_) {
                for (NodeId w : g.neighbors(u)) {
                    if (stamp_[w] != epoch_) {
                        stamp_[w] = epoch_;
                        next_.push_back(w);
                        visit(w, depth);
                    }
                }
            }
            current_.swap(next_);
        }
    }

private:
    std::vector<std::uint32_t> stamp_;
    std::uint32_t epoch_ = 0;
    std::vector<NodeId> current_;
    std::vector<NodeId> next_;
};

BallSearch &thread_search() {
    thread_local BallSearch search;
    return search;
}

void check_radius(int h) {
    if (h < 1) throw InvalidArgument("local metric radius h must be >= 1, got " + std::to_string(h));
}

std::vector<std::size_t> ring_counts(const Graph &g, NodeId v, int h) {
    std::vector<std::size_t> rings(static_cast<std::size_t>(h), 0);
    thread_search().run(g, v, h, [&](NodeId, int depth) {
        if (depth > 0) ++rings[static_cast<std::size_t>(depth - 1)];
    });
    return rings;
}

template <class PerNode>
NodeScores per_node(const Graph &g, PerNode &&score) {
    std::vector<double> out(g.node_count(), 0.0);
    parallel_for(g.node_count(), [&](std::size_t v) { out[v] = score(static_cast<NodeId>(v)); });
    return NodeScores(std::move(out));
}

} // namespace

EgoProfile ego_rings(const Graph &g, NodeId v, int h) {
    check_radius(h);
    if (v >= g.node_count()) throw InvalidArgument("ego_rings: node out of range");
    return EgoProfile{ring_counts(g, v, h)};
}

NodeScores ego_closeness(const Graph &g, int h) {
    check_radius(h);
    return per_node(g, [&](NodeId v) {
        const auto rings = ring_counts(g, v, h);
        double score = 0.0;
        for (std::size_t t = 0; t < rings.size(); ++t) {
            score += static_cast<double>(rings[t]) / static_cast<double>(t + 1);
        }
        return score;
    });
}

NodeScores daccer_vol(const Graph &g, int h) {
    check_radius(h);
    return per_node(g, [&](NodeId v) {
        std::size_t volume = 0;
        thread_search().run(g, v, h, [&](NodeId u, int) { volume += g.degree(u); });
        return static_cast<double>(volume);
    });
}

NodeScores dist_exact_score(const Graph &g, int h) {
    check_radius(h);
    return per_node(g, [&](NodeId v) {
        const auto rings = ring_counts(g, v, h);
        std::size_t farness = 0;
        for (std::size_t t = 0; t < rings.size(); ++t) farness += (t + 1) * rings[t];
        return static_cast<double>(farness);
    });
}

NodeScores degree_scores(const Graph &g) {
    return per_node(g, [&](NodeId v) { return static_cast<double>(g.degree(v)); });
}

LocalMetric parse_local_metric(std::string_view name) {
    if (name == "ego") return LocalMetric::ego;
    if (name == "daccer") return LocalMetric::daccer;
    if (name == "dist-exact") return LocalMetric::dist_exact;
    if (name == "degree") return LocalMetric::degree;
    throw InvalidArgument("unknown metric '" + std::string(name) + "' (expected ego, daccer, dist-exact, degree)");
}

std::string_view to_string(LocalMetric metric) {
    switch (metric) {
    case LocalMetric::ego: return "ego";
    case LocalMetric::daccer: return "daccer";
    case LocalMetric::dist_exact: return "dist-exact";
    case LocalMetric::degree: return "degree";
    }
    return "unknown";
}

NodeScores compute_local_metric(const Graph &g, LocalMetric metric, int h) {
    switch (metric) {
    case LocalMetric::ego: return ego_closeness(g, h);
    case LocalMetric::daccer: return daccer_vol(g, h);
    case LocalMetric::dist_exact: return dist_exact_score(g, h);
    case LocalMetric::degree: return degree_scores(g);
    }
    throw InvalidArgument("unknown metric");
}

} // namespace egocs
