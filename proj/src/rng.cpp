#include "egocs/rng.hpp"

#include "egocs/error.hpp"

namespace egocs::rng {

std::uint64_t splitmix64(std::uint64_t &state) noexcept {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t derive(std::uint64_t master, std::string_view label, std::uint64_t index) noexcept {
    // FNV-1a over the label keeps stream names stable across builds.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : label) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::uint64_t state = master ^ h;
    splitmix64(state);
    state ^= index * 0xd1342543de82ef95ULL;
    return splitmix64(state);
}

Engine make_engine(std::uint64_t master, std::string_view label, std::uint64_t index) {
    return Engine(derive(master, label, index));
}

std::uint64_t uniform_index(Engine &eng, std::uint64_t n) {
    if (n == 0) throw InvalidArgument("uniform_index: empty range");
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
        const std::uint64_t r = eng();
        if (r >= threshold) return r % n;
    }
}

double uniform01(Engine &eng) noexcept {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

} // namespace egocs::rng
