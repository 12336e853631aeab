#pragma once

#include <cstdint>

#include "egocs/graph.hpp"

namespace egocs {

// Barabasi-Albert preferential attachment. Starts from a clique on
// `attach` nodes; every later node links to `attach` distinct existing nodes
// chosen with probability proportional to their current degree.
// Requires n > attach >= 1. Always connected.
Graph gen_ba(std::size_t n, std::size_t attach, std::uint64_t seed);

// Erdos-Renyi G(n, p): each unordered pair independently with probability p.
// Requires n >= 2 and 0 < p <= 1.
Graph gen_er(std::size_t n, double p, std::uint64_t seed);

// G(n, p) with p chosen so the expected average degree is `avg_degree`.
Graph gen_er_avg_degree(std::size_t n, double avg_degree, std::uint64_t seed);

// Watts-Strogatz small world: ring lattice where every node links to its
// k_nbrs nearest neighbours (k_nbrs / 2 per side), then each lattice edge
// (u, u+j) is rewired to (u, w) with probability p_rewire, w uniform among
// nodes that keep the graph simple. Edge count is always n * k_nbrs / 2.
// Requires n > k_nbrs >= 2 and k_nbrs even.
Graph gen_ws(std::size_t n, std::size_t k_nbrs, double p_rewire, std::uint64_t seed);

} // namespace egocs
