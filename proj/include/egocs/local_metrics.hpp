#pragma once

#include <string_view>
#include <vector>

#include "egocs/graph.hpp"

namespace egocs {

// Ring sizes |B_1(v)| .. |B_h(v)| where B_t(v) holds the nodes at exact hop
// distance t from v.
struct EgoProfile {
    std::vector<std::size_t> ring_sizes;

    std::size_t radius() const noexcept { return ring_sizes.size(); }
};

inline constexpr int kDefaultRadius = 2;

// Truncated BFS of radius h from v. Throws InvalidArgument for h < 1 or v out
// of range.
EgoProfile ego_rings(const Graph &g, NodeId v, int h);

// sum_{t=1..h} |B_t(v)| / t for every node. With h = 1 this is the degree.
NodeScores ego_closeness(const Graph &g, int h = kDefaultRadius);

// DACCER volume: sum of degrees over the closed h-hop neighbourhood of each
// node (the node's own degree included).
NodeScores daccer_vol(const Graph &g, int h = kDefaultRadius);

// Truncated farness sum_{t=1..h} t * |B_t(v)|. Lower means more central.
NodeScores dist_exact_score(const Graph &g, int h = kDefaultRadius);

NodeScores degree_scores(const Graph &g);

enum class LocalMetric { ego, daccer, dist_exact, degree };

LocalMetric parse_local_metric(std::string_view name);
std::string_view to_string(LocalMetric metric);

NodeScores compute_local_metric(const Graph &g, LocalMetric metric, int h = kDefaultRadius);

} // namespace egocs
