#pragma once

// Seeded generation with results that do not depend on the standard library's
// distribution implementations.

#include <cstdint>
#include <random>

namespace zflab {

using Rng = std::mt19937_64;

// Uniform integer in [lo, hi], by rejection.
inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng());
  const std::uint64_t limit = Rng::max() - Rng::max() % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

}  // namespace zflab
