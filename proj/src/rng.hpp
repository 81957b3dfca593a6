#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace phasecov {

// Counter-based uniform generator. Every draw is a pure function of
// (seed, counter), so parallel workers can own disjoint counter ranges and
// the merged stream is bit-identical for any worker count.
//
// counter_word(seed, n) is the n-th output of the SplitMix64 sequence seeded
// with `seed`, obtained by random access instead of iteration.

inline constexpr std::uint64_t kSplitMix64Gamma = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

constexpr std::uint64_t counter_word(std::uint64_t seed, std::uint64_t counter) {
  return mix64(seed + (counter + 1) * kSplitMix64Gamma);
}

// Uniform in [0, 1), 53 random bits.
constexpr double uniform01(std::uint64_t seed, std::uint64_t counter) {
  return static_cast<double>(counter_word(seed, counter) >> 11) * 0x1.0p-53;
}

// Uniform in [-1, 1).
constexpr double uniform_pm1(std::uint64_t seed, std::uint64_t counter) {
  return 2.0 * uniform01(seed, counter) - 1.0;
}

// Coordinates of one boxed sample point. Sample i consumes counters
// [4*i, 4*i + out.size()); the fixed stride keeps the index -> point mapping
// independent of how samples are partitioned across workers.
inline void sample_point(std::uint64_t seed, std::uint64_t sample_index,
                         std::span<double> out) {
  for (std::size_t d = 0; d < out.size(); ++d)
    out[d] = uniform_pm1(seed, sample_index * 4 + d);
}

// Reproducible-by-default seed; overridable via --seed or PHASECOV_SEED.
inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEEull;

}  // namespace phasecov
