#pragma once

#include <cstdint>
#include <random>
#include <string_view>

// Seeded random streams. Distributions are implemented here rather than with
// <random> distributions so that outputs are identical across standard
// library implementations.
namespace egocs::rng {

using Engine = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t &state) noexcept;

// Derives an independent stream seed from a master seed, a purpose label and
// an index (row number, repetition, ...).
std::uint64_t derive(std::uint64_t master, std::string_view label, std::uint64_t index = 0) noexcept;

Engine make_engine(std::uint64_t master, std::string_view label, std::uint64_t index = 0);

// Uniform integer in [0, n). n must be positive.
std::uint64_t uniform_index(Engine &eng, std::uint64_t n);

// Uniform double in [0, 1) with 53 random bits.
double uniform01(Engine &eng) noexcept;

} // namespace egocs::rng
