#include <cstdlib>
#include <string>

#include "egocs/error.hpp"
#include "egocs/kernels.hpp"

namespace egocs::kernels {

const Table *avx2_table() noexcept {
#if defined(EGOCS_HAVE_AVX2)
    return detail::avx2_table_impl();
#else
    return nullptr;
#endif
}

bool cpu_supports(Isa isa) noexcept {
    switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(EGOCS_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
        return __builtin_cpu_supports("avx2");
#else
        return false;
#endif
    }
    return false;
}

std::string_view to_string(Isa isa) noexcept {
    switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    }
    return "unknown";
}

const Table &table(Isa isa) {
    if (!cpu_supports(isa)) throw Error("kernel variant '" + std::string(to_string(isa)) + "' unavailable");
    return isa == Isa::avx2 ? *avx2_table() : scalar_table();
}

namespace {

const Table &select_active() {
    if (const char *env = std::getenv("EGOCS_ISA")) {
        const std::string_view want(env);
        if (want == "scalar") return scalar_table();
        if (want == "avx2") return table(Isa::avx2);
    }
    return cpu_supports(Isa::avx2) ? *avx2_table() : scalar_table();
}

} // namespace

const Table &active() {
    static const Table &chosen = select_active();
    return chosen;
}

} // namespace egocs::kernels
