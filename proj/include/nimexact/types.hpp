#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nimexact {

using Pile = std::uint64_t;

// Pile sizes, index 0-based internally; external formats are 1-based.
using Position = std::vector<Pile>;

enum class Ruleset { ExactK, MooreAtMostK };

struct GameSpec {
  std::size_t n = 0;
  std::size_t k = 0;
  Ruleset ruleset = Ruleset::ExactK;
};

// A move assigns new (strictly smaller) values to a set of piles.
// Entries are kept sorted by pile index.
struct Move {
  std::vector<std::pair<std::size_t, Pile>> changes;
};

// Nondecreasing rearrangement with the permutation back to the source:
// source[perm[i]] == sorted[i]. Stable, so equal values keep their
// original relative order.
struct SortedView {
  Position sorted;
  std::vector<std::size_t> perm;
};

enum class Errc {
  DimensionMismatch,
  InvalidSpec,
  IllegalMove,
  Overflow,
  TargetOutOfRange,
  UnsupportedCase,
  RangeViolation,
  PrePositionError,
  NotRealizable,
  BudgetExceeded,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

const char* errc_name(Errc code);

}  // namespace nimexact
