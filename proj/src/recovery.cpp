#include "egocs/recovery.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "egocs/kernels.hpp"

namespace egocs {

BinaryOperator::BinaryOperator(const MeasurementSystem &ms) {
    const std::size_t n = ms.node_count;
    row_offsets_.assign(1, 0);
    row_index_.reserve(ms.nonzeros());
    std::vector<std::size_t> col_counts(n + 1, 0);
    for (const auto &row : ms.row_supports) {
        for (NodeId v : row) {
            if (v >= n) throw InvalidArgument("measurement support references node outside the system");
            row_index_.push_back(v);
            ++col_counts[v + 1];
        }
        row_offsets_.push_back(row_index_.size());
    }
    col_offsets_.resize(n + 1);
    std::partial_sum(col_counts.begin(), col_counts.end(), col_offsets_.begin());
    col_index_.resize(row_index_.size());
    std::vector<std::size_t> cursor(col_offsets_.begin(), col_offsets_.end() - 1);
    for (std::size_t r = 0; r + 1 < row_offsets_.size(); ++r) {
        for (std::size_t e = row_offsets_[r]; e < row_offsets_[r + 1]; ++e) {
            col_index_[cursor[row_index_[e]]++] = static_cast<std::uint32_t>(r);
        }
    }
}

void BinaryOperator::apply(std::span<const double> x, std::span<double> out) const {
    const auto &k = kernels::active();
    for (std::size_t r = 0; r < rows(); ++r) {
        out[r] = k.gather_sum(x.data(), row_index_.data() + row_offsets_[r], row_offsets_[r + 1] - row_offsets_[r]);
    }
}

void BinaryOperator::apply_transpose(std::span<const double> r, std::span<double> out) const {
    const auto &k = kernels::active();
    for (std::size_t c = 0; c < cols(); ++c) {
        out[c] = k.gather_sum(r.data(), col_index_.data() + col_offsets_[c], col_offsets_[c + 1] - col_offsets_[c]);
    }
}

double BinaryOperator::gram_spectral_norm(std::size_t iterations) const {
    // A is non-negative, so the all-ones start is not orthogonal to the
    // leading eigenvector.
    std::vector<double> v(cols(), 1.0);
    std::vector<double> av(rows());
    std::vector<double> w(cols());
    double estimate = 0.0;
    for (std::size_t it = 0; it < std::max<std::size_t>(iterations, 1); ++it) {
        const double norm = std::sqrt(kernels::dot(v, v));
        if (norm == 0.0) return 0.0;
        for (double &e : v) e /= norm;
        apply(v, av);
        apply_transpose(av, w);
        estimate = std::sqrt(kernels::dot(w, w));
        v.swap(w);
    }
    return estimate;
}

namespace {

void check_system(const MeasurementSystem &ms) {
    if (ms.num_measurements() == 0) throw InvalidArgument("measurement system has no rows");
    if (ms.y.size() != ms.num_measurements()) throw InvalidArgument("measurement vector length mismatch");
    for (double v : ms.y) {
        if (!std::isfinite(v)) throw InvalidArgument("measurement vector contains non-finite values");
    }
}

double kkt_violation(std::span<const double> x, std::span<const double> grad, double lambda, bool nonneg) {
    double worst = 0.0;
    for (std::size_t j = 0; j < grad.size(); ++j) {
        double violation = 0.0;
        if (x[j] > 0.0) {
            violation = std::fabs(grad[j] + lambda);
        } else if (x[j] < 0.0) {
            violation = nonneg ? std::fabs(x[j]) + std::fabs(grad[j] - lambda) : std::fabs(grad[j] - lambda);
        } else {
            violation = nonneg ? std::max(0.0, -grad[j] - lambda) : std::max(0.0, std::fabs(grad[j]) - lambda);
        }
        worst = std::max(worst, violation);
    }
    return worst;
}

} // namespace

double lasso_objective(const MeasurementSystem &ms, std::span<const double> x, double lambda) {
    BinaryOperator op(ms);
    std::vector<double> ax(op.rows());
    op.apply(x, ax);
    std::vector<double> r(op.rows());
    kernels::active().sub(ax.data(), ms.y.data(), r.data(), r.size());
    return lambda * kernels::sum_abs(x) + kernels::dot(r, r);
}

RecoveryResult lasso_solve(const MeasurementSystem &ms, const LassoOptions &options) {
    check_system(ms);
    if (!(options.lambda > 0.0)) throw InvalidArgument("lasso_solve: lambda must be positive");
    if (!(options.tol > 0.0)) throw InvalidArgument("lasso_solve: tol must be positive");
    if (!(options.kkt_tol >= 0.0)) throw InvalidArgument("lasso_solve: kkt_tol must be non-negative");

    const auto &k = kernels::active();
    const BinaryOperator op(ms);
    const std::size_t n = op.cols();
    const std::size_t m = op.rows();

    RecoveryResult result;
    result.x_hat.assign(n, 0.0);
    const double y_energy = kernels::dot(ms.y, ms.y);
    result.objective = y_energy;

    const double gram = op.gram_spectral_norm(options.power_iterations);
    if (gram == 0.0 || y_energy == 0.0) {
        // x = 0 is optimal: either A = 0 or y = 0.
        result.converged = true;
        return result;
    }
    std::vector<double> grad(n);
    op.apply_transpose(ms.y, grad);
    double aty_max = 1.0;
    for (double g : grad) aty_max = std::max(aty_max, std::fabs(g));
    const double kkt_bound = options.kkt_tol * aty_max;

    const double step = 1.0 / (1.1 * 2.0 * gram);
    const double threshold = options.lambda * step;

    std::vector<double> x(n, 0.0);       // current iterate
    std::vector<double> x_next(n, 0.0);
    std::vector<double> z(n, 0.0);       // extrapolated point
    std::vector<double> ax(m, 0.0);      // A x
    std::vector<double> ax_next(m, 0.0);
    std::vector<double> az(m, 0.0);      // A z
    std::vector<double> residual(m);

    auto prox_step_from = [&](const std::vector<double> &point, const std::vector<double> &a_point) {
        k.sub(a_point.data(), ms.y.data(), residual.data(), m);
        op.apply_transpose(residual, grad);
        for (double &g : grad) g *= 2.0;
        k.prox_gradient_step(point.data(), grad.data(), step, threshold, options.nonneg, x_next.data(), n);
        op.apply(x_next, ax_next);
        k.sub(ax_next.data(), ms.y.data(), residual.data(), m);
        return options.lambda * k.sum_abs(x_next.data(), n) + k.dot(residual.data(), residual.data(), m);
    };

    double objective = y_energy;
    double momentum = 1.0;
    for (std::size_t it = 1; it <= options.max_iter; ++it) {
        double next_objective = prox_step_from(z, az);
        if (next_objective > objective) {
            // Restart: a plain proximal step from x cannot increase the objective.
            momentum = 1.0;
            next_objective = prox_step_from(x, ax);
        }
        const double next_momentum = (1.0 + std::sqrt(1.0 + 4.0 * momentum * momentum)) / 2.0;
        const double beta = (momentum - 1.0) / next_momentum;
        k.extrapolate(x_next.data(), x.data(), beta, z.data(), n);
        k.extrapolate(ax_next.data(), ax.data(), beta, az.data(), m);
        x.swap(x_next);
        ax.swap(ax_next);
        momentum = next_momentum;

        const double change = std::fabs(objective - next_objective) / std::max(std::fabs(objective), 1e-300);
        objective = std::min(objective, next_objective);
        result.iterations = it;
        if (change < options.tol) {
            // residual holds A x - y for the accepted iterate.
            op.apply_transpose(residual, grad);
            for (double &g : grad) g *= 2.0;
            if (kkt_violation(x, grad, options.lambda, options.nonneg) <= kkt_bound) {
                result.converged = true;
                break;
            }
        }
    }
    result.x_hat = std::move(x);
    result.objective = objective;
    return result;
}

double kkt_residual(const MeasurementSystem &ms, std::span<const double> x, double lambda, bool nonneg) {
    if (x.size() != ms.node_count) throw InvalidArgument("kkt_residual: dimension mismatch");
    if (ms.y.size() != ms.num_measurements()) throw InvalidArgument("kkt_residual: measurement vector length mismatch");
    std::vector<double> grad(ms.node_count, 0.0);
    for (std::size_t i = 0; i < ms.num_measurements(); ++i) {
        double ax = 0.0;
        for (NodeId v : ms.row_supports[i]) ax += x[v];
        const double r = ax - ms.y[i];
        for (NodeId v : ms.row_supports[i]) grad[v] += 2.0 * r;
    }
    return kkt_violation(x, grad, lambda, nonneg);
}

RankedNodes top_k(std::span<const double> scores, std::size_t k) {
    if (k < 1 || k > scores.size()) throw InvalidArgument("top_k: k must lie in [1, n]");
    std::vector<NodeId> order(scores.size());
    std::iota(order.begin(), order.end(), NodeId{0});
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end(),
                      [&](NodeId a, NodeId b) { return scores[a] > scores[b] || (scores[a] == scores[b] && a < b); });
    RankedNodes out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) out.push_back({order[i], scores[order[i]]});
    return out;
}

std::vector<NodeId> top_k_nodes(std::span<const double> scores, std::size_t k) {
    std::vector<NodeId> out;
    for (const auto &r : top_k(scores, k)) out.push_back(r.node);
    return out;
}

} // namespace egocs
