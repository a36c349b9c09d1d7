#pragma once

#include <cstdint>

#include "nimexact/types.hpp"

namespace nimexact {

// Binary digits of the piles, their column residues mod (k+1), and Moore's
// base-(k+1) digit value M(x). M(x) == 0 characterizes the P-positions of
// MooreAtMostK, M(x) == 1 the 1-positions.
struct MooreDigits {
  std::vector<std::vector<std::uint8_t>> bits;  // bits[pile][bit]
  std::vector<unsigned> ydigits;                // y_j = sum_i bits[i][j] mod (k+1)
  Pile mvalue;                                  // sum_j y_j (k+1)^j
};

MooreDigits moore_m(const GameSpec& spec, const Position& pos);

// Legal Moore move (1..k piles strictly decreased) whose successor has
// M == 0. PrePositionError when M(pos) == 0.
Move moore_move_to_zero(const GameSpec& spec, const Position& pos);

// Same construction with the seven-case rule at bit 0; successor has M == 1.
// PrePositionError when M(pos) <= 1.
Move moore_move_to_one(const GameSpec& spec, const Position& pos);

}  // namespace nimexact
