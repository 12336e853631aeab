#pragma once

#include <span>
#include <vector>

#include "egocs/measurements.hpp"

namespace egocs {

struct LassoOptions {
    double lambda = 1.0;
    bool nonneg = true;
    double tol = 1e-8;
    std::size_t max_iter = 100'000;
    std::size_t power_iterations = 50;
    // Convergence also requires kkt_residual <= kkt_tol * max(1, ||A^T y||_inf).
    double kkt_tol = 1e-8;
};

struct RecoveryResult {
    std::vector<double> x_hat;
    double objective = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
};

// Binary sparse operator A with row and column index lists, so both A x and
// A^T r are gather-sums.
class BinaryOperator {
public:
    explicit BinaryOperator(const MeasurementSystem &ms);

    std::size_t rows() const noexcept { return row_offsets_.size() - 1; }
    std::size_t cols() const noexcept { return col_offsets_.size() - 1; }

    void apply(std::span<const double> x, std::span<double> out) const;
    void apply_transpose(std::span<const double> r, std::span<double> out) const;

    // Estimate of the largest eigenvalue of A^T A by power iteration.
    double gram_spectral_norm(std::size_t iterations) const;

private:
    std::vector<std::size_t> row_offsets_;
    std::vector<std::uint32_t> row_index_;
    std::vector<std::size_t> col_offsets_;
    std::vector<std::uint32_t> col_index_;
};

// lambda * ||x||_1 + ||A x - y||_2^2
double lasso_objective(const MeasurementSystem &ms, std::span<const double> x, double lambda);

// Minimizes lambda * ||x||_1 + ||A x - y||_2^2 (optionally over x >= 0) with
// FISTA. The step is 1 / (1.1 * 2 * ||A||_2^2), the norm estimated by power
// iteration. Momentum restarts whenever a step would raise the objective, so
// accepted iterates never increase it. Stops when the relative objective
// change drops below tol and the KKT residual is within kkt_tol of the scale
// of A^T y, or after max_iter iterations.
RecoveryResult lasso_solve(const MeasurementSystem &ms, const LassoOptions &options = {});

// Largest violation of the optimality conditions of the LASSO objective at x,
// with g = 2 A^T (A x - y):
//   x_j != 0: |g_j + lambda * sign(x_j)|
//   x_j == 0: max(0, |g_j| - lambda)
// With nonneg set, zero coordinates only need g_j >= -lambda.
double kkt_residual(const MeasurementSystem &ms, std::span<const double> x, double lambda, bool nonneg = false);

struct RankedNode {
    NodeId node;
    double score;

    friend bool operator==(const RankedNode &, const RankedNode &) = default;
};

using RankedNodes = std::vector<RankedNode>;

// The k largest entries, descending, ties broken by ascending node id.
// Requires 1 <= k <= scores.size().
RankedNodes top_k(std::span<const double> scores, std::size_t k);

std::vector<NodeId> top_k_nodes(std::span<const double> scores, std::size_t k);

} // namespace egocs
