#include "egocs/generators.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "egocs/rng.hpp"

namespace egocs {

namespace {

std::uint64_t edge_key(NodeId u, NodeId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

} // namespace

Graph gen_ba(std::size_t n, std::size_t attach, std::uint64_t seed) {
    if (attach < 1 || n <= attach) throw InvalidArgument("gen_ba: requires n > attach >= 1");
    if (n > std::numeric_limits<NodeId>::max()) throw InvalidArgument("gen_ba: n too large");
    auto eng = rng::make_engine(seed, "gen-ba");

    std::vector<Edge> edges;
    edges.reserve(attach * (n - attach) + attach * (attach - 1) / 2);
    // Every edge endpoint once; a uniform draw is a degree-weighted draw.
    std::vector<NodeId> endpoints;
    endpoints.reserve(2 * edges.capacity());
    for (NodeId u = 0; u < attach; ++u) {
        for (NodeId v = u + 1; v < attach; ++v) {
            edges.emplace_back(u, v);
            endpoints.push_back(u);
            endpoints.push_back(v);
        }
    }
    std::vector<NodeId> targets;
    targets.reserve(attach);
    for (auto t = static_cast<NodeId>(attach); t < n; ++t) {
        targets.clear();
        while (targets.size() < attach) {
            // Only a single isolated seed node has no endpoints yet.
            const NodeId pick = endpoints.empty()
                                    ? static_cast<NodeId>(rng::uniform_index(eng, t))
                                    : endpoints[rng::uniform_index(eng, endpoints.size())];
            if (std::find(targets.begin(), targets.end(), pick) == targets.end()) targets.push_back(pick);
        }
        for (NodeId v : targets) {
            edges.emplace_back(v, t);
            endpoints.push_back(v);
            endpoints.push_back(t);
        }
    }
    return Graph::from_edges(n, edges);
}

Graph gen_er(std::size_t n, double p, std::uint64_t seed) {
    if (n < 2) throw InvalidArgument("gen_er: requires n >= 2");
    if (!(p > 0.0 && p <= 1.0)) throw InvalidArgument("gen_er: requires 0 < p <= 1");
    if (n > std::numeric_limits<NodeId>::max()) throw InvalidArgument("gen_er: n too large");
    auto eng = rng::make_engine(seed, "gen-er");
    std::vector<Edge> edges;
    if (p == 1.0) {
        for (NodeId v = 1; v < n; ++v) {
            for (NodeId w = 0; w < v; ++w) edges.emplace_back(w, v);
        }
        return Graph::from_edges(n, edges);
    }
    // Geometric skipping over the lower triangle (Batagelj & Brandes).
    const double log_q = std::log1p(-p);
    std::int64_t v = 1;
    std::int64_t w = -1;
    const auto nn = static_cast<std::int64_t>(n);
    while (v < nn) {
        const double r = rng::uniform01(eng);
        w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
        while (w >= v && v < nn) {
            w -= v;
            ++v;
        }
        if (v < nn) edges.emplace_back(static_cast<NodeId>(w), static_cast<NodeId>(v));
    }
    return Graph::from_edges(n, edges);
}

Graph gen_er_avg_degree(std::size_t n, double avg_degree, std::uint64_t seed) {
    if (n < 2) throw InvalidArgument("gen_er: requires n >= 2");
    const double p = avg_degree / static_cast<double>(n - 1);
    return gen_er(n, p, seed);
}

Graph gen_ws(std::size_t n, std::size_t k_nbrs, double p_rewire, std::uint64_t seed) {
    if (k_nbrs < 2 || k_nbrs % 2 != 0 || n <= k_nbrs) {
        throw InvalidArgument("gen_ws: requires n > k_nbrs >= 2 with k_nbrs even");
    }
    if (!(p_rewire >= 0.0 && p_rewire <= 1.0)) throw InvalidArgument("gen_ws: requires 0 <= p_rewire <= 1");
    if (n > std::numeric_limits<NodeId>::max()) throw InvalidArgument("gen_ws: n too large");
    auto eng = rng::make_engine(seed, "gen-ws");

    const std::size_t half = k_nbrs / 2;
    std::unordered_set<std::uint64_t> present;
    present.reserve(n * half * 2);
    std::vector<std::size_t> degree(n, k_nbrs);
    // lattice[j - 1][u] holds the current far endpoint of edge (u, u + j).
    std::vector<std::vector<NodeId>> lattice(half, std::vector<NodeId>(n));
    for (std::size_t j = 1; j <= half; ++j) {
        for (NodeId u = 0; u < n; ++u) {
            const auto v = static_cast<NodeId>((u + j) % n);
            lattice[j - 1][u] = v;
            present.insert(edge_key(u, v));
        }
    }
    if (p_rewire > 0.0) {
        for (std::size_t j = 1; j <= half; ++j) {
            for (NodeId u = 0; u < n; ++u) {
                if (rng::uniform01(eng) >= p_rewire) continue;
                if (degree[u] >= n - 1) continue;
                NodeId w = 0;
                do {
                    w = static_cast<NodeId>(rng::uniform_index(eng, n));
                } while (w == u || present.contains(edge_key(u, w)));
                const NodeId v = lattice[j - 1][u];
                present.erase(edge_key(u, v));
                present.insert(edge_key(u, w));
                --degree[v];
                ++degree[w];
                lattice[j - 1][u] = w;
            }
        }
    }
    std::vector<Edge> edges;
    edges.reserve(present.size());
    for (std::size_t j = 0; j < half; ++j) {
        for (NodeId u = 0; u < n; ++u) edges.emplace_back(u, lattice[j][u]);
    }
    return Graph::from_edges(n, edges);
}

} // namespace egocs
