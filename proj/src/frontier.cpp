#include <algorithm>
#include <bit>

#include "egocs/measurements.hpp"

namespace egocs {

double selection_weight(double score) noexcept { return score > 0.0 ? score : kZeroWeightFloor; }

FrontierState::FrontierState(std::size_t node_count) : stamp_(node_count, 0), slot_of_(node_count, 0) {}

void FrontierState::start(const Graph &g, std::span<const double> weights, NodeId first) {
    if (g.node_count() != stamp_.size()) throw InvalidArgument("FrontierState: graph size mismatch");
    if (first >= g.node_count()) throw InvalidArgument("FrontierState: start node out of range");
    if (++epoch_ == 0) {
        std::fill(stamp_.begin(), stamp_.end(), 0);
        epoch_ = 1;
    }
    visited_.clear();
    slot_node_.clear();
    slot_weight_.clear();
    tree_.assign(1, 0.0);
    active_ = 0;

    stamp_[first] = epoch_;
    slot_of_[first] = kVisitedSlot;
    visited_.push_back(first);
    for (NodeId w : g.neighbors(first)) push_frontier(w, selection_weight(weights[w]));
}

void FrontierState::absorb(const Graph &g, std::span<const double> weights, NodeId v) {
    if (!in_frontier(v)) throw InvalidArgument("FrontierState: node is not on the frontier");
    remove_slot(slot_of_[v]);
    slot_of_[v] = kVisitedSlot;
    visited_.push_back(v);
    for (NodeId w : g.neighbors(v)) {
        if (!seen(w)) push_frontier(w, selection_weight(weights[w]));
    }
}

void FrontierState::push_frontier(NodeId v, double w) {
    stamp_[v] = epoch_;
    const std::size_t slot = slot_node_.size();
    slot_of_[v] = static_cast<std::uint32_t>(slot);
    slot_node_.push_back(v);
    slot_weight_.push_back(w);
    // Node i of the tree covers slots (i - lowbit(i), i].
    const std::size_t i = slot + 1;
    const std::size_t low = i & (~i + 1);
    tree_.push_back(w + prefix(i - 1) - prefix(i - low));
    ++active_;
}

void FrontierState::remove_slot(std::size_t slot) {
    const double w = slot_weight_[slot];
    slot_weight_[slot] = 0.0;
    for (std::size_t i = slot + 1; i < tree_.size(); i += i & (~i + 1)) tree_[i] -= w;
    --active_;
}

double FrontierState::prefix(std::size_t count) const {
    double s = 0.0;
    for (std::size_t i = count; i > 0; i -= i & (~i + 1)) s += tree_[i];
    return s;
}

double FrontierState::total_weight() const { return prefix(slot_node_.size()); }

NodeId FrontierState::draw(rng::Engine &eng) const {
    if (active_ == 0) throw InvalidArgument("FrontierState: draw from empty frontier");
    const std::size_t size = slot_node_.size();
    double remaining = rng::uniform01(eng) * total_weight();
    std::size_t pos = 0;
    for (std::size_t step = std::bit_floor(size); step > 0; step >>= 1) {
        if (pos + step <= size && tree_[pos + step] <= remaining) {
            pos += step;
            remaining -= tree_[pos];
        }
    }
    // Rounding left over from removals can land the descent on a removed or
    // past-the-end slot; take the nearest live one.
    if (pos >= size || slot_weight_[pos] == 0.0) {
        std::size_t fwd = std::min(pos, size);
        while (fwd < size && slot_weight_[fwd] == 0.0) ++fwd;
        if (fwd < size) return slot_node_[fwd];
        std::size_t back = std::min(pos, size);
        while (back > 0 && slot_weight_[back - 1] == 0.0) --back;
        return slot_node_[back - 1];
    }
    return slot_node_[pos];
}

std::vector<NodeId> FrontierState::frontier() const {
    std::vector<NodeId> out;
    out.reserve(active_);
    for (std::size_t s = 0; s < slot_node_.size(); ++s) {
        if (slot_weight_[s] != 0.0) out.push_back(slot_node_[s]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool FrontierState::in_visited(NodeId v) const { return v < stamp_.size() && seen(v) && slot_of_[v] == kVisitedSlot; }

bool FrontierState::in_frontier(NodeId v) const {
    return v < stamp_.size() && seen(v) && slot_of_[v] != kVisitedSlot && slot_weight_[slot_of_[v]] != 0.0;
}

} // namespace egocs
