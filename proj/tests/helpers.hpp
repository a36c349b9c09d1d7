#pragma once

#include <random>

#include "nimexact/types.hpp"

namespace testutil {

using nimexact::Pile;
using nimexact::Position;

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64{seed}; }

inline Position random_position(std::mt19937_64& rng, std::size_t n, Pile max_pile) {
  std::uniform_int_distribution<Pile> dist(0, max_pile);
  Position pos(n);
  for (Pile& v : pos) v = dist(rng);
  return pos;
}

// Direct evaluation of the classical realizability conditions for k-uniform
// degree sequences: k | sum, and sum(min(x_i, g)) >= k*g for g = 1..sum/k.
inline bool gale_ryser_realizable(const Position& degrees, std::size_t k) {
  unsigned __int128 total = 0;
  for (Pile v : degrees) total += v;
  if (total % k != 0) return false;
  const unsigned __int128 m = total / k;
  for (unsigned __int128 g = 1; g <= m; ++g) {
    unsigned __int128 cut = 0;
    for (Pile v : degrees) cut += v < g ? static_cast<unsigned __int128>(v) : g;
    if (cut < static_cast<unsigned __int128>(k) * g) return false;
  }
  return true;
}

}  // namespace testutil
