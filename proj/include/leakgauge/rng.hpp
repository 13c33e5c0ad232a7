#pragma once

#include <cstdint>
#include <random>

namespace leakgauge {

// SplitMix64 finalizer, used as a stateless 64-bit hash for seed derivation.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Sub-seed for record `index` of a stream seeded with `seed`. Per-record
// draws depend only on (seed, index), so parallel or out-of-order execution
// cannot change results.
constexpr std::uint64_t record_seed(std::uint64_t seed,
                                    std::uint64_t index) noexcept {
  return splitmix64(splitmix64(seed) ^ splitmix64(index));
}

// Unbiased integer in [0, bound) by rejection. bound must be positive.
inline std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  std::uint64_t draw = gen();
  while (draw < threshold) draw = gen();
  return draw % bound;
}

// Uniform double in [0, 1), 53 random bits.
inline double uniform_unit(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Uniform double in the open interval (0, 1); safe to pass through log().
inline double uniform_open_unit(std::mt19937_64& gen) {
  return (static_cast<double>(gen() >> 12) + 0.5) * 0x1.0p-52;
}

}  // namespace leakgauge
