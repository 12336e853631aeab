#include <cmath>

#include "egocs/kernels.hpp"

namespace egocs::kernels {

namespace {

double dot_scalar(const double *a, const double *b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

double sum_abs_scalar(const double *a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::fabs(a[i]);
    return s;
}

double gather_sum_scalar(const double *x, const std::uint32_t *idx, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[idx[i]];
    return s;
}

void sub_scalar(const double *a, const double *b, double *out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] - b[i];
}

void prox_gradient_step_scalar(const double *z, const double *grad, double step, double threshold, bool nonneg,
                               double *out, std::size_t n) {
    if (nonneg) {
        for (std::size_t i = 0; i < n; ++i) {
            const double d = (z[i] - step * grad[i]) - threshold;
            out[i] = d > 0.0 ? d : 0.0;
        }
        return;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const double v = z[i] - step * grad[i];
        out[i] = v > threshold ? v - threshold : (v < -threshold ? v + threshold : 0.0);
    }
}

void extrapolate_scalar(const double *x, const double *x_prev, double beta, double *out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = x[i] + beta * (x[i] - x_prev[i]);
}

constexpr Table kScalar{
    Isa::scalar,       dot_scalar, sum_abs_scalar, gather_sum_scalar, sub_scalar, prox_gradient_step_scalar,
    extrapolate_scalar,
};

} // namespace

const Table &scalar_table() noexcept { return kScalar; }

} // namespace egocs::kernels
