// Seeded randomness with results that do not depend on the standard library
// vendor (std::uniform_int_distribution is implementation-defined).
#pragma once

#include <cstdint>
#include <random>

namespace emptri::detail {

using Rng = std::mt19937_64;

/// Uniform integer in [0, n), n > 0, by rejection.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % n;
}

}  // namespace emptri::detail
