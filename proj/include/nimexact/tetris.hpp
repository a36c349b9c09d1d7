#pragma once

#include "nimexact/types.hpp"

namespace nimexact {

// Bar-shift profile of a position: the n-k smallest piles are emptied and
// their tokens re-stacked onto the k largest, smallest pile first.
// T_{n,k}(x) = xbar[n-k] (0-based), and sum(xbar) == sum(x).
struct TetrisProfile {
  Position xbar;   // nondecreasing
  std::size_t ell; // number of equalized top columns minus one, 0 <= ell <= k-1
  Pile alpha;      // uniform raise of the first ell+1 top columns
  Pile beta;       // how many of those get one extra token, 0 <= beta <= ell
  Pile tvalue;     // T_{n,k}(x)
};

// Greedy slow-move recursion; pseudo-polynomial, desk scale only.
Pile tetris_oracle(const GameSpec& spec, const Position& pos);

// Linear-time bar shift (O(n log n) with the internal sort, O(n) when the
// caller certifies nondecreasing input via assume_sorted).
TetrisProfile tetris_fast(const GameSpec& spec, const Position& pos,
                          bool assume_sorted = false);

// Volume certificate: k*g <= sum(min(x_i,g)) and sum(min(x_i,g+1)) < k*(g+1).
// Holds for exactly one g, namely T_{n,k}(pos).
bool tetris_certificate(const GameSpec& spec, const Position& pos, Pile g);

// A legal ExactK move whose successor has Tetris value exactly g, found by
// binary search on the token total kept in the k largest piles between the
// emptying and the slow-move envelopes. Valid targets are
// T(x^l) <= g <= T(x)-1; for 2k > n the lower end is 0.
Move move_to_tetris(const GameSpec& spec, const Position& pos, Pile g);

namespace detail {

// Core of tetris_fast on a nondecreasing array, no allocation.
Pile tetris_value_sorted(const Pile* x, std::size_t n, std::size_t k);

}  // namespace detail

}  // namespace nimexact
