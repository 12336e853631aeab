#include "egocs/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <string>

namespace egocs {

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges,
                        std::vector<std::uint64_t> labels) {
    if (!labels.empty() && labels.size() != node_count) {
        throw InvalidArgument("Graph: label count does not match node count");
    }
    std::vector<Edge> arcs;
    arcs.reserve(edges.size() * 2);
    for (auto [u, v] : edges) {
        if (u >= node_count || v >= node_count) throw InvalidArgument("Graph: edge endpoint out of range");
        if (u == v) continue;
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

    Graph g;
    g.offsets_.assign(node_count + 1, 0);
    for (const auto &arc : arcs) ++g.offsets_[arc.first + 1];
    for (std::size_t i = 0; i < node_count; ++i) g.offsets_[i + 1] += g.offsets_[i];
    g.neighbors_.reserve(arcs.size());
    for (const auto &arc : arcs) g.neighbors_.push_back(arc.second);
    for (std::size_t v = 0; v < node_count; ++v) {
        g.max_degree_ = std::max(g.max_degree_, g.offsets_[v + 1] - g.offsets_[v]);
    }
    if (labels.empty()) {
        labels.resize(node_count);
        for (std::size_t i = 0; i < node_count; ++i) labels[i] = i;
    }
    g.labels_ = std::move(labels);
    return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    const auto nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (NodeId u = 0; u < node_count(); ++u) {
        for (NodeId v : neighbors(u)) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph Graph::induced_subgraph(std::span<const NodeId> nodes) const {
    constexpr NodeId absent = std::numeric_limits<NodeId>::max();
    std::vector<NodeId> remap(node_count(), absent);
    std::vector<std::uint64_t> labels;
    labels.reserve(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        remap[nodes[i]] = static_cast<NodeId>(i);
        labels.push_back(labels_[nodes[i]]);
    }
    std::vector<Edge> sub;
    for (NodeId u : nodes) {
        for (NodeId v : neighbors(u)) {
            if (u < v && remap[v] != absent) sub.emplace_back(remap[u], remap[v]);
        }
    }
    return from_edges(nodes.size(), sub, std::move(labels));
}

namespace {

bool parse_id(std::string_view token, std::uint64_t &out) {
    const char *first = token.data();
    const char *last = first + token.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

} // namespace

Graph load_edge_list(std::istream &in, bool /*directed*/) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view rest(line);
        const auto first_char = rest.find_first_not_of(" \t\r");
        if (first_char == std::string_view::npos || rest[first_char] == '#' || rest[first_char] == '%') continue;

        std::string_view tokens[2];
        std::size_t found = 0;
        std::size_t pos = first_char;
        while (found < 2 && pos < rest.size()) {
            const auto end = rest.find_first_of(" \t\r,", pos);
            const auto tok = rest.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
            if (!tok.empty()) tokens[found++] = tok;
            if (end == std::string_view::npos) break;
            pos = rest.find_first_not_of(" \t\r,", end);
            if (pos == std::string_view::npos) break;
        }
        if (found < 2) throw ParseError("expected two node ids", line_no);
        std::uint64_t u = 0;
        std::uint64_t v = 0;
        if (!parse_id(tokens[0], u) || !parse_id(tokens[1], v)) {
            throw ParseError("node ids must be non-negative integers", line_no);
        }
        raw.emplace_back(u, v);
    }
    if (raw.empty()) throw ParseError("edge list is empty", 0);

    std::vector<std::uint64_t> labels;
    labels.reserve(raw.size() * 2);
    for (auto [u, v] : raw) {
        labels.push_back(u);
        labels.push_back(v);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    if (labels.size() > std::numeric_limits<NodeId>::max()) throw ParseError("too many nodes", 0);

    auto index_of = [&](std::uint64_t id) {
        return static_cast<NodeId>(std::lower_bound(labels.begin(), labels.end(), id) - labels.begin());
    };
    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (auto [u, v] : raw) edges.emplace_back(index_of(u), index_of(v));
    const std::size_t n = labels.size();
    return Graph::from_edges(n, edges, std::move(labels));
}

void write_edge_list(std::ostream &out, const Graph &g) {
    for (auto [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
}

} // namespace egocs
