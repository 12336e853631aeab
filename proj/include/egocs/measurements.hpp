#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "egocs/graph.hpp"
#include "egocs/rng.hpp"

namespace egocs {

// Binary measurement matrix in sparse row form together with the aggregated
// measurement vector y = A x.
struct MeasurementSystem {
    std::size_t node_count = 0;
    // Row supports, each sorted ascending without duplicates.
    std::vector<std::vector<NodeId>> row_supports;
    std::vector<double> y;
    std::size_t walk_length = 0;

    std::size_t num_measurements() const noexcept { return row_supports.size(); }
    std::size_t nonzeros() const noexcept;

    friend bool operator==(const MeasurementSystem &, const MeasurementSystem &) = default;
};

// Weight given to zero-score frontier nodes so they stay selectable.
inline constexpr double kZeroWeightFloor = 1e-12;

// Visited set S and frontier N(S) of one growing measurement.
//
// Frontier nodes occupy slots of a Fenwick tree over their selection
// weights, so a weighted draw is a binary-search descent over cumulative
// weights and insertions and removals are logarithmic. Scratch memory is
// sized to the graph once and reused across start() calls.
class FrontierState {
public:
    explicit FrontierState(std::size_t node_count);

    // Resets to S = {first}, N(S) = neighbours of first.
    void start(const Graph &g, std::span<const double> weights, NodeId first);

    // Moves v (a frontier node) into S and adds its unseen neighbours to N(S).
    void absorb(const Graph &g, std::span<const double> weights, NodeId v);

    // Draws a frontier node with probability proportional to its weight.
    // Does not modify the state. The frontier must be non-empty.
    NodeId draw(rng::Engine &eng) const;

    bool frontier_empty() const noexcept { return active_ == 0; }
    std::size_t frontier_size() const noexcept { return active_; }
    std::span<const NodeId> visited() const noexcept { return visited_; }
    std::vector<NodeId> frontier() const;
    bool in_visited(NodeId v) const;
    bool in_frontier(NodeId v) const;
    double total_weight() const;

private:
    static constexpr std::uint32_t kVisitedSlot = 0xffffffffu;

    void push_frontier(NodeId v, double w);
    void remove_slot(std::size_t slot);
    double prefix(std::size_t count) const;
    bool seen(NodeId v) const { return stamp_[v] == epoch_; }

    std::vector<std::uint32_t> stamp_;
    std::vector<std::uint32_t> slot_of_;
    std::uint32_t epoch_ = 0;
    std::vector<NodeId> visited_;
    std::vector<NodeId> slot_node_;
    std::vector<double> slot_weight_; // 0 once removed
    std::vector<double> tree_;        // 1-based Fenwick tree over slot_weight_
    std::size_t active_ = 0;
};

// Selection weight for a score: the score itself, or kZeroWeightFloor for 0.
double selection_weight(double score) noexcept;

struct Measurement {
    std::vector<NodeId> support; // sorted
    double y = 0.0;
};

// One score-weighted frontier walk: starts at `start` and performs up to l
// extensions, each drawing the next node from the frontier with probability
// proportional to its score. Stops early if the component is exhausted.
Measurement build_measurement(const Graph &g, const NodeScores &scores, NodeId start, std::size_t l,
                              rng::Engine &eng);

// m frontier-walk measurements weighted by `scores` (ego-closeness for the
// main method). Starts are uniform over V; row i uses its own stream derived
// from (seed, i), so rows are built in parallel and the result depends only
// on the inputs.
MeasurementSystem build_matrix(const Graph &g, const NodeScores &scores, std::size_t m, std::size_t l,
                               std::uint64_t seed);

// Classic random walk of l steps to uniform neighbours; revisits collapse into
// the binary support. y aggregates `scores`.
MeasurementSystem build_matrix_rw(const Graph &g, const NodeScores &scores, std::size_t m, std::size_t l,
                                  std::uint64_t seed);

// Frontier walk weighted by degree; y aggregates `scores`.
MeasurementSystem build_matrix_topcent(const Graph &g, const NodeScores &scores, std::size_t m, std::size_t l,
                                       std::uint64_t seed);

// Walk-free random rows: each node joins each row independently with
// probability d / m. Connectivity is not enforced. Requires 0 < d <= m.
MeasurementSystem build_matrix_dicenod(const Graph &g, const NodeScores &scores, std::size_t m, double d,
                                       std::uint64_t seed);

// The d giving an expected row size of mean_row_size.
double dicenod_d_for_row_size(std::size_t node_count, std::size_t m, double mean_row_size);

enum class Builder { hiclose, rw, topcent, dicenod };

Builder parse_builder(std::string_view name);
std::string_view to_string(Builder builder);

struct Feasibility {
    std::vector<bool> rows;
    double fraction = 0.0;
};

// A row is feasible iff its support is non-empty and induces a connected
// subgraph of g.
Feasibility verify_feasibility(const Graph &g, const MeasurementSystem &ms);

bool induces_connected_subgraph(const Graph &g, std::span<const NodeId> sorted_support);

} // namespace egocs
