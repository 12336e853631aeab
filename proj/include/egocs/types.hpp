#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "egocs/error.hpp"

namespace egocs {

using NodeId = std::uint32_t;

// Hop distance; kUnreachable marks nodes outside the source's component.
using Distance = std::uint32_t;
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

// Dense non-negative per-node values (centralities, recovered signals, ...).
class NodeScores {
public:
    NodeScores() = default;
    explicit NodeScores(std::vector<double> values) : values_(std::move(values)) {
        for (double v : values_) {
            if (!std::isfinite(v) || v < 0.0) throw InvalidArgument("NodeScores: entries must be finite and non-negative");
        }
    }

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    std::span<const double> values() const noexcept { return values_; }
    const std::vector<double> &vector() const noexcept { return values_; }

private:
    std::vector<double> values_;
};

} // namespace egocs
