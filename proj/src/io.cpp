#include "egocs/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace egocs::io {

std::string format_double(double v) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc()) throw Error("format_double: conversion failed");
    return std::string(buf.data(), ptr);
}

double parse_double(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) text.remove_suffix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw ParseError("not a number: '" + std::string(text) + "'", 0);
    }
    return v;
}

namespace {

std::uint64_t parse_label(std::string_view text, std::size_t line) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw ParseError("invalid node id '" + std::string(text) + "'", line);
    }
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

} // namespace

LabelIndex::LabelIndex(std::span<const std::uint64_t> labels) : labels_(labels.begin(), labels.end()) {
    sorted_.reserve(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) sorted_.emplace_back(labels_[i], static_cast<NodeId>(i));
    std::sort(sorted_.begin(), sorted_.end());
}

LabelIndex LabelIndex::identity(std::size_t n) {
    std::vector<std::uint64_t> ids(n);
    for (std::size_t i = 0; i < n; ++i) ids[i] = i;
    return LabelIndex(ids);
}

std::optional<NodeId> LabelIndex::find(std::uint64_t label) const {
    auto it = std::lower_bound(sorted_.begin(), sorted_.end(), std::make_pair(label, NodeId{0}));
    if (it == sorted_.end() || it->first != label) return std::nullopt;
    return it->second;
}

void write_node_values(std::ostream &out, const LabelIndex &labels, std::span<const double> values,
                       std::string_view column) {
    if (values.size() != labels.size()) throw InvalidArgument("write_node_values: length mismatch");
    std::vector<NodeId> order(values.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<NodeId>(i);
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return labels.label(a) < labels.label(b); });
    out << "node_id," << column << '\n';
    for (NodeId v : order) out << labels.label(v) << ',' << format_double(values[v]) << '\n';
}

std::vector<double> read_node_values(std::istream &in, const LabelIndex &labels) {
    std::vector<double> values(labels.size(), 0.0);
    std::vector<bool> seen(labels.size(), false);
    std::string line;
    std::size_t line_no = 0;
    bool header = true;
    while (std::getline(in, line)) {
        ++line_no;
        const auto text = trim(line);
        if (text.empty() || text.front() == '#') continue;
        if (header) {
            header = false;
            if (!text.starts_with("node_id,")) throw ParseError("expected header 'node_id,<column>'", line_no);
            continue;
        }
        const auto comma = text.find(',');
        if (comma == std::string_view::npos) throw ParseError("expected 'node_id,value'", line_no);
        const auto label = parse_label(trim(text.substr(0, comma)), line_no);
        const auto node = labels.find(label);
        if (!node) throw ParseError("node id " + std::to_string(label) + " is not in the graph", line_no);
        if (seen[*node]) throw ParseError("duplicate node id " + std::to_string(label), line_no);
        try {
            values[*node] = parse_double(text.substr(comma + 1));
        } catch (const ParseError &e) {
            throw ParseError(e.what(), line_no);
        }
        seen[*node] = true;
    }
    if (header) throw ParseError("empty node value file", 0);
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
        throw ParseError("node value file does not cover every node", 0);
    }
    return values;
}

void write_measurements(std::ostream &out, const MeasurementSystem &ms, const LabelIndex &labels) {
    std::vector<std::uint64_t> row;
    for (std::size_t i = 0; i < ms.num_measurements(); ++i) {
        row.clear();
        for (NodeId v : ms.row_supports[i]) row.push_back(labels.label(v));
        std::sort(row.begin(), row.end());
        out << format_double(ms.y[i]) << ':';
        for (auto label : row) out << ' ' << label;
        out << '\n';
    }
}

MeasurementSystem read_measurements(std::istream &in, const LabelIndex &labels, std::size_t walk_length) {
    MeasurementSystem ms;
    ms.node_count = labels.size();
    ms.walk_length = walk_length;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto text = trim(line);
        if (text.empty() || text.front() == '#') continue;
        const auto colon = text.find(':');
        if (colon == std::string_view::npos) throw ParseError("expected 'y_value: id id ...'", line_no);
        double y = 0.0;
        try {
            y = parse_double(text.substr(0, colon));
        } catch (const ParseError &e) {
            throw ParseError(e.what(), line_no);
        }
        std::vector<NodeId> support;
        std::string_view rest = text.substr(colon + 1);
        while (!rest.empty()) {
            rest = trim(rest);
            if (rest.empty()) break;
            const auto end = rest.find_first_of(" \t");
            const auto token = rest.substr(0, end);
            const auto node = labels.find(parse_label(token, line_no));
            if (!node) throw ParseError("node id " + std::string(token) + " is not in the graph", line_no);
            support.push_back(*node);
            rest = end == std::string_view::npos ? std::string_view{} : rest.substr(end);
        }
        std::sort(support.begin(), support.end());
        if (std::adjacent_find(support.begin(), support.end()) != support.end()) {
            throw ParseError("node listed twice in one measurement", line_no);
        }
        ms.row_supports.push_back(std::move(support));
        ms.y.push_back(y);
    }
    return ms;
}

std::string sidecar_json(const MatrixSidecar &meta) {
    nlohmann::ordered_json j;
    j["m"] = meta.m;
    j["l"] = meta.l;
    j["seed"] = meta.seed;
    j["builder"] = meta.builder;
    j["score_metric"] = meta.score_metric;
    j["h"] = meta.h;
    j["nodes"] = meta.nodes;
    if (meta.d) j["d"] = *meta.d;
    return j.dump(2) + "\n";
}

MatrixSidecar parse_sidecar(std::string_view json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
        MatrixSidecar meta;
        meta.m = j.at("m").get<std::size_t>();
        meta.l = j.at("l").get<std::size_t>();
        meta.seed = j.at("seed").get<std::uint64_t>();
        meta.builder = j.at("builder").get<std::string>();
        meta.score_metric = j.at("score_metric").get<std::string>();
        meta.h = j.at("h").get<int>();
        meta.nodes = j.value("nodes", std::size_t{0});
        if (j.contains("d")) meta.d = j.at("d").get<double>();
        return meta;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("matrix sidecar: ") + e.what(), 0);
    }
}

void write_stats(std::ostream &out, const NetworkStats &stats) {
    out << "nodes,edges,avg_deg,avg_cc,diameter,eff_diameter_90\n";
    out << stats.nodes << ',' << stats.edges << ',' << format_double(stats.avg_degree) << ','
        << format_double(stats.avg_clustering) << ',' << stats.diameter << ','
        << format_double(stats.effective_diameter_90) << '\n';
    if (stats.sampled()) out << "# sampled_sources=" << stats.bfs_sources << '\n';
}

std::string digest(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string &path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + path + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error("write failed for '" + path + "'");
}

} // namespace egocs::io
