#pragma once

#include <span>
#include <vector>

#include "egocs/types.hpp"

namespace egocs {

// Pearson product-moment correlation. Requires equal lengths >= 2; throws
// UndefinedCorrelation when either input is constant.
double pearson(std::span<const double> x, std::span<const double> y);

struct LogPearson {
    double value = 0.0;
    bool shifted = false; // a vector contained zeros and was shifted
};

// pearson(ln x, ln y). Entries must be positive; with shift_zeros set, a
// vector containing zeros is shifted by 1e-9 * max(vector) first.
LogPearson log_pearson(std::span<const double> x, std::span<const double> y, bool shift_zeros = false);

// Pearson over the k nodes ranked highest by `global` (ties by node id).
double topk_pearson(std::span<const double> local, std::span<const double> global, std::size_t k);

struct PrecisionRecall {
    double precision = 0.0;
    double recall = 0.0;
};

// precision = |D & T| / |D| (0 for empty D); recall = |D & T| / |T|.
// Throws when truth is empty.
PrecisionRecall precision_recall(std::span<const NodeId> detected, std::span<const NodeId> truth);

// Harmonic mean of precision and recall; 0 when both are 0.
double f_measure(double precision, double recall);

// Mean with separate deviations of the values above and below it.
struct Summary {
    double mean = 0.0;
    double std_lo = 0.0;
    double std_hi = 0.0;
};

Summary summarize(std::span<const double> values);

} // namespace egocs
