#include "egocs/evaluation.hpp"

#include <algorithm>
#include <cmath>

#include "egocs/recovery.hpp"

namespace egocs {

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw InvalidArgument("pearson: length mismatch");
    if (x.size() < 2) throw InvalidArgument("pearson: need at least two observations");
    const auto n = static_cast<double>(x.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) throw UndefinedCorrelation();
    const double r = sxy / std::sqrt(sxx * syy);
    return std::clamp(r, -1.0, 1.0);
}

namespace {

std::vector<double> logged(std::span<const double> v, bool shift_zeros, bool &shifted) {
    bool has_zero = false;
    double peak = 0.0;
    for (double e : v) {
        if (e < 0.0 || std::isnan(e)) throw InvalidArgument("log_pearson: entries must be non-negative");
        if (e == 0.0) has_zero = true;
        peak = std::max(peak, e);
    }
    double shift = 0.0;
    if (has_zero) {
        if (!shift_zeros) throw InvalidArgument("log_pearson: zero entry (enable the shift policy)");
        if (peak == 0.0) throw UndefinedCorrelation();
        shift = 1e-9 * peak;
        shifted = true;
    }
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::log(v[i] + shift);
    return out;
}

} // namespace

LogPearson log_pearson(std::span<const double> x, std::span<const double> y, bool shift_zeros) {
    LogPearson out;
    const auto lx = logged(x, shift_zeros, out.shifted);
    const auto ly = logged(y, shift_zeros, out.shifted);
    out.value = pearson(lx, ly);
    return out;
}

double topk_pearson(std::span<const double> local, std::span<const double> global, std::size_t k) {
    if (local.size() != global.size()) throw InvalidArgument("topk_pearson: length mismatch");
    const auto nodes = top_k_nodes(global, k);
    std::vector<double> a;
    std::vector<double> b;
    a.reserve(k);
    b.reserve(k);
    for (NodeId v : nodes) {
        a.push_back(local[v]);
        b.push_back(global[v]);
    }
    return pearson(a, b);
}

PrecisionRecall precision_recall(std::span<const NodeId> detected, std::span<const NodeId> truth) {
    if (truth.empty()) throw InvalidArgument("precision_recall: ground truth set is empty");
    std::vector<NodeId> d(detected.begin(), detected.end());
    std::vector<NodeId> t(truth.begin(), truth.end());
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    std::vector<NodeId> common;
    std::set_intersection(d.begin(), d.end(), t.begin(), t.end(), std::back_inserter(common));
    PrecisionRecall pr;
    pr.precision = d.empty() ? 0.0 : static_cast<double>(common.size()) / static_cast<double>(d.size());
    pr.recall = static_cast<double>(common.size()) / static_cast<double>(t.size());
    return pr;
}

double f_measure(double precision, double recall) {
    if (precision + recall <= 0.0) return 0.0;
    return 2.0 * precision * recall / (precision + recall);
}

Summary summarize(std::span<const double> values) {
    Summary s;
    if (values.empty()) return s;
    for (double v : values) s.mean += v;
    s.mean /= static_cast<double>(values.size());
    double lo = 0.0;
    double hi = 0.0;
    std::size_t n_lo = 0;
    std::size_t n_hi = 0;
    for (double v : values) {
        const double d = v - s.mean;
        if (d < 0.0) {
            lo += d * d;
            ++n_lo;
        } else if (d > 0.0) {
            hi += d * d;
            ++n_hi;
        }
    }
    s.std_lo = n_lo ? std::sqrt(lo / static_cast<double>(n_lo)) : 0.0;
    s.std_hi = n_hi ? std::sqrt(hi / static_cast<double>(n_hi)) : 0.0;
    return s;
}

} // namespace egocs
