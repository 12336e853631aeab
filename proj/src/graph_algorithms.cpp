#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>

#include "egocs/graph.hpp"
#include "egocs/parallel.hpp"
#include "egocs/rng.hpp"

namespace egocs {

namespace {

// Fills `dist` (pre-sized to n, all kUnreachable) from `source`, using
// `queue` as scratch. Returns the number of reached nodes including source.
std::size_t bfs_fill(const Graph &g, NodeId source, std::vector<Distance> &dist, std::vector<NodeId> &queue) {
    queue.clear();
    queue.push_back(source);
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const NodeId u = queue[head];
        const Distance next = dist[u] + 1;
        for (NodeId w : g.neighbors(u)) {
            if (dist[w] == kUnreachable) {
                dist[w] = next;
                queue.push_back(w);
            }
        }
    }
    return queue.size();
}

} // namespace

std::vector<Distance> bfs_distances(const Graph &g, NodeId source) {
    if (source >= g.node_count()) throw InvalidArgument("bfs_distances: source out of range");
    std::vector<Distance> dist(g.node_count(), kUnreachable);
    std::vector<NodeId> queue;
    queue.reserve(g.node_count());
    bfs_fill(g, source, dist, queue);
    return dist;
}

std::vector<NodeId> connected_components(const Graph &g, std::size_t *count) {
    const std::size_t n = g.node_count();
    constexpr NodeId unset = std::numeric_limits<NodeId>::max();
    std::vector<NodeId> comp(n, unset);
    std::vector<NodeId> stack;
    NodeId next = 0;
    for (NodeId s = 0; s < n; ++s) {
        if (comp[s] != unset) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            const NodeId u = stack.back();
            stack.pop_back();
            for (NodeId w : g.neighbors(u)) {
                if (comp[w] == unset) {
                    comp[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    if (count) *count = next;
    return comp;
}

bool is_connected(const Graph &g) {
    std::size_t count = 0;
    connected_components(g, &count);
    return count <= 1;
}

Graph largest_connected_component(const Graph &g) {
    std::size_t count = 0;
    const auto comp = connected_components(g, &count);
    if (count <= 1) return g;
    std::vector<std::size_t> sizes(count, 0);
    for (NodeId c : comp) ++sizes[c];
    // Components are numbered by their smallest node, so the first maximum
    // is the tie-break winner.
    const auto best = static_cast<NodeId>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
    std::vector<NodeId> keep;
    keep.reserve(sizes[best]);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (comp[v] == best) keep.push_back(v);
    }
    return g.induced_subgraph(keep);
}

NodeScores closeness_exact(const Graph &g) {
    const std::size_t n = g.node_count();
    if (n == 0) throw InvalidArgument("closeness_exact: empty graph");
    if (!is_connected(g)) throw DisconnectedGraph("closeness_exact");
    std::vector<double> out(n, 0.0);
    if (n == 1) return NodeScores(std::move(out));
    // Bit-parallel BFS: bit b of a word tracks source batch*64 + b. Distance
    // sums are integers, so the result equals one BFS per source exactly.
    constexpr std::size_t kLanes = 64;
    const std::size_t batches = (n + kLanes - 1) / kLanes;
    parallel_for(batches, [&](std::size_t batch) {
        const std::size_t first = batch * kLanes;
        const std::size_t lanes = std::min(kLanes, n - first);
        const std::uint64_t all = lanes == kLanes ? ~std::uint64_t{0} : (std::uint64_t{1} << lanes) - 1;
        std::vector<std::uint64_t> seen(n, 0), frontier(n, 0), next(n, 0);
        for (std::size_t b = 0; b < lanes; ++b) {
            seen[first + b] = frontier[first + b] = std::uint64_t{1} << b;
        }
        std::array<std::uint64_t, kLanes> total{};
        for (std::uint64_t level = 1;; ++level) {
            bool grew = false;
            for (NodeId v = 0; v < n; ++v) {
                std::uint64_t reach = 0;
                if (seen[v] != all) {
                    for (NodeId w : g.neighbors(v)) reach |= frontier[w];
                    reach &= ~seen[v];
                }
                next[v] = reach;
                if (reach == 0) continue;
                grew = true;
                seen[v] |= reach;
                for (std::uint64_t bits = reach; bits != 0; bits &= bits - 1) {
                    total[static_cast<std::size_t>(std::countr_zero(bits))] += level;
                }
            }
            if (!grew) break;
            frontier.swap(next);
        }
        for (std::size_t b = 0; b < lanes; ++b) {
            out[first + b] = static_cast<double>(n - 1) / static_cast<double>(total[b]);
        }
    });
    return NodeScores(std::move(out));
}

std::vector<double> local_clustering(const Graph &g) {
    const std::size_t n = g.node_count();
    std::vector<double> cc(n, 0.0);
    parallel_for(n, [&](std::size_t vi) {
        const auto v = static_cast<NodeId>(vi);
        const auto nbrs = g.neighbors(v);
        const std::size_t d = nbrs.size();
        if (d < 2) return;
        std::uint64_t links = 0;
        for (NodeId u : nbrs) {
            // Both lists are sorted; count common neighbors by merging.
            const auto other = g.neighbors(u);
            auto a = nbrs.begin();
            auto b = other.begin();
            while (a != nbrs.end() && b != other.end()) {
                if (*a < *b) {
                    ++a;
                } else if (*b < *a) {
                    ++b;
                } else {
                    ++links;
                    ++a;
                    ++b;
                }
            }
        }
        // Every triangle edge among neighbors is seen twice.
        cc[vi] = static_cast<double>(links) / static_cast<double>(d * (d - 1));
    });
    return cc;
}

double effective_diameter(std::span<const std::uint64_t> histogram, double quantile) {
    std::uint64_t total = 0;
    for (std::size_t d = 1; d < histogram.size(); ++d) total += histogram[d];
    if (total == 0) return 0.0;
    const double target = quantile * static_cast<double>(total);
    std::uint64_t below = 0;
    for (std::size_t d = 1; d < histogram.size(); ++d) {
        const std::uint64_t upto = below + histogram[d];
        if (static_cast<double>(upto) >= target) {
            if (histogram[d] == 0) return static_cast<double>(d);
            return static_cast<double>(d - 1) +
                   (target - static_cast<double>(below)) / static_cast<double>(histogram[d]);
        }
        below = upto;
    }
    return static_cast<double>(histogram.size() - 1);
}

NetworkStats network_stats(const Graph &g, std::size_t max_sources, std::uint64_t seed) {
    const std::size_t n = g.node_count();
    if (n == 0) throw InvalidArgument("network_stats: empty graph");
    if (!is_connected(g)) throw DisconnectedGraph("network_stats");

    NetworkStats stats;
    stats.nodes = n;
    stats.edges = g.edge_count();
    stats.avg_degree = 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(n);
    const auto cc = local_clustering(g);
    stats.avg_clustering = std::accumulate(cc.begin(), cc.end(), 0.0) / static_cast<double>(n);

    std::vector<NodeId> sources(n);
    std::iota(sources.begin(), sources.end(), NodeId{0});
    if (max_sources > 0 && n > max_sources) {
        auto eng = rng::make_engine(seed, "stats-sources");
        for (std::size_t i = 0; i < max_sources; ++i) {
            const auto j = i + rng::uniform_index(eng, n - i);
            std::swap(sources[i], sources[j]);
        }
        sources.resize(max_sources);
        std::sort(sources.begin(), sources.end());
    }
    stats.bfs_sources = sources.size();

    std::vector<std::vector<std::uint64_t>> per_source(sources.size());
    parallel_for(sources.size(), [&](std::size_t i) {
        std::vector<Distance> dist(n, kUnreachable);
        std::vector<NodeId> queue;
        queue.reserve(n);
        bfs_fill(g, sources[i], dist, queue);
        auto &hist = per_source[i];
        hist.assign(dist[queue.back()] + 1, 0);
        for (NodeId v : queue) ++hist[dist[v]];
        hist[0] = 0;
    });
    std::vector<std::uint64_t> histogram;
    for (const auto &hist : per_source) {
        if (hist.size() > histogram.size()) histogram.resize(hist.size(), 0);
        for (std::size_t d = 0; d < hist.size(); ++d) histogram[d] += hist[d];
    }
    stats.diameter = histogram.empty() ? 0 : static_cast<Distance>(histogram.size() - 1);
    stats.effective_diameter_90 = effective_diameter(histogram, 0.9);
    return stats;
}

} // namespace egocs
