#include "frontier/rng.hpp"

#include <numeric>

namespace frontier {

std::vector<Index> sample_without_replacement(Index n, Index k, std::mt19937_64& rng) {
  std::vector<Index> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), Index{0});
  // Partial Fisher-Yates: the first k slots end up uniformly chosen.
  for (Index i = 0; i < k; ++i) {
    const auto j = i + static_cast<Index>(uniform_below(rng, static_cast<std::uint64_t>(n - i)));
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
  }
  pool.resize(static_cast<std::size_t>(k));
  return pool;
}

} // namespace frontier
