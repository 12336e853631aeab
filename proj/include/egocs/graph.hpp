#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "egocs/types.hpp"

namespace egocs {

using Edge = std::pair<NodeId, NodeId>;

// Immutable undirected simple graph in compressed adjacency form.
//
// Node ids are contiguous 0..node_count()-1 and every adjacency list is
// sorted ascending. Each node also carries an external label (the id it had
// in the input file); generated graphs use label == id.
class Graph {
public:
    Graph() = default;

    // Builds a graph from an arbitrary edge list. Self-loops and duplicate
    // edges (in either orientation) are dropped. Empty labels means identity.
    static Graph from_edges(std::size_t node_count, std::span<const Edge> edges,
                            std::vector<std::uint64_t> labels = {});

    std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }
    std::size_t max_degree() const noexcept { return max_degree_; }

    std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
    std::span<const NodeId> neighbors(NodeId v) const {
        return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
    }
    bool has_edge(NodeId u, NodeId v) const;

    std::uint64_t label(NodeId v) const { return labels_[v]; }
    std::span<const std::uint64_t> labels() const noexcept { return labels_; }

    // Every edge once, as (u, v) with u < v, in ascending order.
    std::vector<Edge> edges() const;

    // Subgraph induced by `nodes`; node i of the result is nodes[i] and keeps
    // its label.
    Graph induced_subgraph(std::span<const NodeId> nodes) const;

    friend bool operator==(const Graph &, const Graph &) = default;

private:
    std::vector<std::size_t> offsets_;
    std::vector<NodeId> neighbors_;
    std::vector<std::uint64_t> labels_;
    std::size_t max_degree_ = 0;
};

// Reads a whitespace-separated edge list ("u v" per line, '#' or '%' comments,
// arbitrary non-negative integer ids, extra columns ignored). External ids are
// remapped to 0..n-1 in ascending id order and kept as labels. `directed`
// only documents the source; arcs are symmetrized either way.
Graph load_edge_list(std::istream &in, bool directed = false);

// Writes "u v" lines using node labels.
void write_edge_list(std::ostream &out, const Graph &g);

// Hop distances from `source`; kUnreachable for other components.
std::vector<Distance> bfs_distances(const Graph &g, NodeId source);

// Component id per node, components numbered in order of their smallest node.
std::vector<NodeId> connected_components(const Graph &g, std::size_t *count = nullptr);

bool is_connected(const Graph &g);

// Induced subgraph on the largest component. Ties go to the component whose
// smallest original node id is lowest.
Graph largest_connected_component(const Graph &g);

// C(u) = (|V|-1) / sum_v d(u, v), 64 sources per bit-parallel BFS.
// Throws DisconnectedGraph when g is not connected.
NodeScores closeness_exact(const Graph &g);

struct NetworkStats {
    std::size_t nodes = 0;
    std::size_t edges = 0;
    double avg_degree = 0.0;
    double avg_clustering = 0.0;
    Distance diameter = 0;
    double effective_diameter_90 = 0.0;
    // Number of BFS sources used; less than `nodes` means diameter and
    // effective diameter are estimates.
    std::size_t bfs_sources = 0;

    bool sampled() const noexcept { return bfs_sources < nodes; }
};

// Above this node count network_stats samples BFS sources by default.
inline constexpr std::size_t kExactStatsLimit = 50'000;

// Degree, clustering, diameter and 90th percentile effective diameter.
// Distance statistics use every node as a BFS source unless the graph has
// more than `max_sources` nodes, in which case `max_sources` sources are
// drawn with `seed`. Throws DisconnectedGraph on disconnected input.
NetworkStats network_stats(const Graph &g, std::size_t max_sources = kExactStatsLimit,
                           std::uint64_t seed = 42);

// Local clustering coefficient per node (0 for degree < 2).
std::vector<double> local_clustering(const Graph &g);

// Linear interpolation of the `quantile` point of a hop-distance histogram
// (histogram[d] = number of ordered pairs at distance d, d >= 1).
double effective_diameter(std::span<const std::uint64_t> histogram, double quantile = 0.9);

} // namespace egocs
