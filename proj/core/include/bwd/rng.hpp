#pragma once

#include <cstdint>
#include <random>

namespace bwd {

// Every seeded stream in the library is std::mt19937_64, whose output sequence
// is fixed by the standard. Range reduction is done here with plain rejection
// sampling instead of std::uniform_int_distribution, whose algorithm is left
// to the implementation; together this keeps CSV output identical across
// standard libraries.
using Rng = std::mt19937_64;

// Uniform integer in [0, bound). bound must be nonzero.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  // 2^64 mod bound, computed without overflow.
  const std::uint64_t reject = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t draw = rng();
    if (draw >= reject) return draw % bound;
  }
}

// Uniform integer in [lo, hi].
inline std::uint64_t uniform_between(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return lo + uniform_below(rng, hi - lo + 1);
}

}  // namespace bwd
