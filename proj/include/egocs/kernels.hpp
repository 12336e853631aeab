#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

// Data-parallel inner loops of the sparse solver.
//
// Every kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant. The active table is chosen once at startup from CPU features and
// can be pinned with EGOCS_ISA=scalar|avx2. Elementwise kernels are
// bit-identical across variants; reductions agree to rounding.
namespace egocs::kernels {

enum class Isa { scalar, avx2 };

struct Table {
    Isa isa;
    double (*dot)(const double *a, const double *b, std::size_t n);
    double (*sum_abs)(const double *a, std::size_t n);
    // sum_i x[idx[i]]; indices must be below 2^31.
    double (*gather_sum)(const double *x, const std::uint32_t *idx, std::size_t n);
    // out = a - b
    void (*sub)(const double *a, const double *b, double *out, std::size_t n);
    // out = soft_threshold(z - step * grad, threshold), clamped at zero when
    // nonneg is set.
    void (*prox_gradient_step)(const double *z, const double *grad, double step, double threshold, bool nonneg,
                               double *out, std::size_t n);
    // out = x + beta * (x - x_prev)
    void (*extrapolate)(const double *x, const double *x_prev, double beta, double *out, std::size_t n);
};

const Table &scalar_table() noexcept;
// nullptr when the AVX2 variant was not compiled in.
const Table *avx2_table() noexcept;

bool cpu_supports(Isa isa) noexcept;
std::string_view to_string(Isa isa) noexcept;

// Table for `isa`; throws when it is unavailable on this build or CPU.
const Table &table(Isa isa);

// The dispatched table.
const Table &active();

inline double dot(std::span<const double> a, std::span<const double> b) {
    return active().dot(a.data(), b.data(), a.size());
}
inline double sum_abs(std::span<const double> a) { return active().sum_abs(a.data(), a.size()); }
inline double gather_sum(std::span<const double> x, std::span<const std::uint32_t> idx) {
    return active().gather_sum(x.data(), idx.data(), idx.size());
}

namespace detail {
const Table *avx2_table_impl() noexcept;
}

} // namespace egocs::kernels
