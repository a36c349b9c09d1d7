#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nimexact/types.hpp"

namespace nimexact {

// All successors of a position up to reordering: each successor is returned
// sorted nondecreasing, with duplicates removed.
std::vector<Position> successors(const GameSpec& spec, const Position& pos);

// Smallest nonnegative integer absent from `values`.
unsigned mex(std::vector<unsigned> values);

// Memoized brute-force Sprague-Grundy evaluator.  The cache is keyed on the
// sorted position.  `budget` bounds the number of distinct positions ever
// evaluated; exceeding it throws BudgetExceeded.
class SgOracle {
 public:
  explicit SgOracle(GameSpec spec, std::size_t budget = 5'000'000);

  unsigned value(const Position& pos);
  std::size_t cache_size() const { return cache_.size(); }
  const GameSpec& spec() const { return spec_; }

 private:
  GameSpec spec_;
  std::size_t budget_;
  std::map<Position, unsigned> cache_;
};

// One-shot convenience wrapper around SgOracle.
unsigned sg_brute(const GameSpec& spec, const Position& pos,
                  std::size_t budget = 5'000'000);

// Advance `pos` to the next nondecreasing tuple with entries in
// [0, max_pile], lexicographically; false when it wraps back to all zeros.
bool next_sorted(Position& pos, Pile max_pile);

// One row of an exhaustive value table.
struct TableRow {
  Position pos;  // sorted nondecreasing
  unsigned sg;
};

// Evaluate every sorted position with entries in [0, max_pile] for the given
// spec, in lexicographic order of the sorted tuples.
std::vector<TableRow> build_table(const GameSpec& spec, Pile max_pile,
                                  std::size_t budget = 5'000'000);

// Serialize a table as CSV with header "pos,sg,source"; pos is the
// semicolon-joined sorted pile list, source names the evaluator.
std::string table_to_csv(const std::vector<TableRow>& rows,
                         const std::string& source);

}  // namespace nimexact
