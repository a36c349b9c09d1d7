#pragma once

#include "nimexact/types.hpp"

namespace nimexact {

enum class SgType { TypeI, TypeII };

// Parameter tuple of the closed-form SG value for n == 2k:
//   u = T_{2k,k}(x), m = min pile, y = T_{2k,k}(x - m*1),
//   z = 1 + C(y+1,2), v = (z-1) + ((m-z) mod (y+1)),
//   g = u for TypeI (m < z) and v for TypeII (m >= z).
struct SgParams {
  Pile u;
  Pile m;
  Pile y;
  Pile z;
  Pile v;
  SgType kind;
  Pile g;
};

// Unique decomposition g = C(nu+1,2) + eps with 0 <= eps <= nu.
struct NuEps {
  Pile nu;
  Pile eps;
};

NuEps nu_eps(Pile g);

// ExactK, n == 2k, k >= 2 only; UnsupportedCase otherwise.
SgParams sg_params(const GameSpec& spec, const Position& pos);

// Dispatch: k == 1 -> Bouton XOR, n < 2k -> Tetris value,
// n == 2k (k >= 2) -> closed form. UnsupportedCase for 1 < k < n/2.
Pile sg_value(const GameSpec& spec, const Position& pos);

// Sorted x has x_1 = ... = x_{k+1} (more than half of the smallest equal).
bool is_p_position(const GameSpec& spec, const Position& pos);

// Sorted x is 2c on the first k-l piles and 2c+1 on the next 2l+1,
// for some c >= 0 and l in {0..k-1}.
bool is_one_position(const GameSpec& spec, const Position& pos);

// A legal move whose successor has SG value exactly delta < sg_value(pos).
Move winning_move(const GameSpec& spec, const Position& pos, Pile delta);

// Position between the envelopes (lower <= result <= upper) whose
// y-value T(pos - min(pos)*1) is exactly target_y, by bisection over the
// canonical token-removal path (differing coordinates drained in index
// order). spec supplies k.
Position interpolate_y(const GameSpec& spec, const Position& upper,
                       const Position& lower, Pile target_y);

}  // namespace nimexact
