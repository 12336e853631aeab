#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "egocs/graph.hpp"
#include "egocs/measurements.hpp"

namespace egocs::io {

// Shortest decimal text that parses back to the same double.
std::string format_double(double v);
double parse_double(std::string_view text);

// Maps external labels back to node ids.
class LabelIndex {
public:
    explicit LabelIndex(std::span<const std::uint64_t> labels);
    // Identity mapping for ids 0..n-1.
    static LabelIndex identity(std::size_t n);

    std::size_t size() const noexcept { return labels_.size(); }
    std::uint64_t label(NodeId v) const { return labels_[v]; }
    std::optional<NodeId> find(std::uint64_t label) const;

private:
    std::vector<std::uint64_t> labels_;
    std::vector<std::pair<std::uint64_t, NodeId>> sorted_;
};

// CSV with header `node_id,<column>`, one row per node sorted by label.
void write_node_values(std::ostream &out, const LabelIndex &labels, std::span<const double> values,
                       std::string_view column);

// Reads `node_id,<value>` rows (header required). Every node must appear once.
std::vector<double> read_node_values(std::istream &in, const LabelIndex &labels);

// `y_value: id id ...` per row, ids as labels in ascending order.
void write_measurements(std::ostream &out, const MeasurementSystem &ms, const LabelIndex &labels);

MeasurementSystem read_measurements(std::istream &in, const LabelIndex &labels, std::size_t walk_length = 0);

struct MatrixSidecar {
    std::size_t m = 0;
    std::size_t l = 0;
    std::uint64_t seed = 0;
    std::string builder;
    std::string score_metric;
    int h = 0;
    std::size_t nodes = 0;
    std::optional<double> d;
};

std::string sidecar_json(const MatrixSidecar &meta);
MatrixSidecar parse_sidecar(std::string_view json_text);

// Stats CSV: header `nodes,edges,avg_deg,avg_cc,diameter,eff_diameter_90`.
void write_stats(std::ostream &out, const NetworkStats &stats);

// 64-bit FNV-1a of a byte string, as 16 hex digits.
std::string digest(std::string_view bytes);

std::string read_file(const std::string &path);
void write_file(const std::string &path, std::string_view contents);

} // namespace egocs::io
