#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "frontier/types.hpp"

namespace frontier {

/// splitmix64 finalizer; used to derive independent, order-free RNG
/// streams from (seed, repetition, lambda index).
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t repetition,
                                   std::uint64_t lambda_index) {
  return std::mt19937_64(mix64(mix64(seed ^ mix64(repetition + 1)) ^ mix64(lambda_index + 0x51ULL)));
}

/// Uniform double in [0, 1) with 53 random bits. Hand-rolled so results
/// do not depend on the standard library's distribution internals.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, n) via rejection sampling (unbiased).
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

/// Fisher-Yates shuffle using uniform_below.
template <typename T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(items[i - 1], items[j]);
  }
}

/// k distinct values drawn uniformly from {0, ..., n-1}.
std::vector<Index> sample_without_replacement(Index n, Index k, std::mt19937_64& rng);

} // namespace frontier
