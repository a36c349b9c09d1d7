#include "nimexact/sg_exact.hpp"

#include <algorithm>
#include <cmath>

#include "nimexact/checked.hpp"
#include "nimexact/core.hpp"
#include "nimexact/tetris.hpp"

namespace nimexact {

namespace {

using u128 = unsigned __int128;

u128 binom2(u128 t) { return t * (t - 1) / 2; }  // C(t, 2)

void require_n2k(const GameSpec& spec, const Position& pos) {
  validate(spec, pos);
  if (spec.ruleset != Ruleset::ExactK || spec.n != 2 * spec.k || spec.k < 2)
    throw Error(Errc::UnsupportedCase,
                "closed form requires ExactK with n == 2k and k >= 2");
}

// T(pos - min(pos)*1) for the 2k-pile game; pos need not be sorted.
Pile eval_y(const Position& pos, std::size_t k, Position& scratch) {
  scratch = pos;
  std::sort(scratch.begin(), scratch.end());
  const Pile m = scratch.front();
  for (Pile& v : scratch) v -= m;
  return detail::tetris_value_sorted(scratch.data(), scratch.size(), k);
}

}  // namespace

NuEps nu_eps(Pile g) {
  Pile nu = static_cast<Pile>((std::sqrt(8.0L * static_cast<long double>(g) + 1.0L) - 1.0L) / 2.0L);
  while (nu > 0 && binom2(u128{nu} + 1) > g) --nu;
  while (binom2(u128{nu} + 2) <= g) ++nu;
  return NuEps{nu, g - static_cast<Pile>(binom2(u128{nu} + 1))};
}

SgParams sg_params(const GameSpec& spec, const Position& pos) {
  require_n2k(spec, pos);
  const std::size_t k = spec.k;
  SortedView sv = normalize(pos);
  Position& x = sv.sorted;
  SgParams p{};
  p.u = detail::tetris_value_sorted(x.data(), x.size(), k);
  p.m = x.front();
  Position shifted = x;
  for (Pile& v : shifted) v -= p.m;
  p.y = detail::tetris_value_sorted(shifted.data(), shifted.size(), k);
  const u128 z = z_of_y(p.y);
  const u128 w = u128{p.y} + 1;
  if (p.m >= z) {
    p.kind = SgType::TypeII;
    p.z = static_cast<Pile>(z);  // z <= m fits
    p.v = (p.z - 1) + ((p.m - p.z) % (p.y + 1));
    p.g = p.v;
  } else {
    p.kind = SgType::TypeI;
    p.z = checked_narrow(z, "z(x) = 1 + C(y+1,2)");
    const u128 rho = ((p.m % w) + w - (z % w)) % w;
    p.v = checked_narrow(z - 1 + rho, "v(x)");
    p.g = p.u;
  }
  return p;
}

Pile sg_value(const GameSpec& spec, const Position& pos) {
  validate(spec, pos);
  if (spec.ruleset != Ruleset::ExactK)
    throw Error(Errc::UnsupportedCase, "sg_value covers the ExactK ruleset only");
  if (spec.k == 1) {
    Pile g = 0;
    for (Pile v : pos) g ^= v;
    return g;
  }
  if (spec.n < 2 * spec.k)
    return tetris_fast(spec, pos).tvalue;
  if (spec.n == 2 * spec.k)
    return sg_params(spec, pos).g;
  throw Error(Errc::UnsupportedCase,
              "SG value of ExactK with 1 < k < n/2 is an open problem");
}

bool is_p_position(const GameSpec& spec, const Position& pos) {
  require_n2k(spec, pos);
  Position x = pos;
  std::sort(x.begin(), x.end());
  return x[spec.k] == x[0];
}

bool is_one_position(const GameSpec& spec, const Position& pos) {
  require_n2k(spec, pos);
  const std::size_t k = spec.k;
  Position x = pos;
  std::sort(x.begin(), x.end());
  if (x[0] % 2 != 0) return false;  // pattern starts with an even block of size >= 1
  const Pile even = x[0];
  const Pile odd = even + 1;
  std::size_t r = 0;
  while (r < x.size() && x[r] == even) ++r;
  if (r > k) return false;  // ell = k - r would be negative
  // need the next 2(k-r)+1 entries equal to 2c+1
  const std::size_t span = 2 * (k - r) + 1;
  if (r + span > x.size()) return false;
  for (std::size_t i = r; i < r + span; ++i)
    if (x[i] != odd) return false;
  return true;
}

Position interpolate_y(const GameSpec& spec, const Position& upper,
                       const Position& lower, Pile target_y) {
  if (upper.size() != lower.size() || upper.size() != spec.n)
    throw Error(Errc::DimensionMismatch, "envelope sizes disagree with the spec");
  std::vector<std::size_t> diff_idx;
  Pile total = 0;
  for (std::size_t i = 0; i < upper.size(); ++i) {
    if (lower[i] > upper[i])
      throw Error(Errc::RangeViolation, "lower envelope exceeds upper envelope");
    if (lower[i] < upper[i]) {
      diff_idx.push_back(i);
      total = checked_add(total, upper[i] - lower[i]);
    }
  }
  Position scratch;
  // position after removing t tokens along the canonical path
  Position probe = upper;
  auto at = [&](Pile t) -> const Position& {
    probe = upper;
    Pile remaining = t;
    for (std::size_t i : diff_idx) {
      const Pile d = upper[i] - lower[i];
      const Pile take = std::min(d, remaining);
      probe[i] -= take;
      remaining -= take;
      if (remaining == 0) break;
    }
    return probe;
  };
  const Pile y_hi = eval_y(upper, spec.k, scratch);
  const Pile y_lo = eval_y(lower, spec.k, scratch);
  if (target_y > y_hi || target_y < y_lo)
    throw Error(Errc::RangeViolation,
                "target y outside [" + std::to_string(y_lo) + ", " + std::to_string(y_hi) + "]");
  // y is nonincreasing in t with unit steps; find the smallest t reaching it
  Pile lo = 0, hi = total;
  while (lo < hi) {
    const Pile mid = lo + (hi - lo) / 2;
    if (eval_y(at(mid), spec.k, scratch) <= target_y)
      hi = mid;
    else
      lo = mid + 1;
  }
  if (eval_y(at(lo), spec.k, scratch) == target_y) return at(lo);
  // bounded local scan around the probe before giving up
  const Pile window = 2 * (static_cast<Pile>(spec.k) + 1);
  const Pile from = lo > window ? lo - window : 0;
  const Pile to = std::min(total, checked_add(lo, window));
  for (Pile t = from; t <= to; ++t)
    if (eval_y(at(t), spec.k, scratch) == target_y) return at(t);
  throw Error(Errc::RangeViolation, "no position on the canonical path attains the target y");
}

namespace {

// ---- winning_move constructions, all on sorted coordinates -----------------
//
// Each helper returns the successor in sorted coordinates; the caller maps it
// back through the permutation. x is nondecreasing, n == 2k, k >= 2.

// Type I, 0 <= delta < m(x), m(x) >= 1: move to a type II position with
// m = mu and y = gamma, where v(mu, gamma) == delta. Three envelope pairs
// cover (mu, gamma), each drained to the exact y by interpolation.
Position move_to_pair_type1(const GameSpec& spec, const Position& x, Pile mu, Pile gamma) {
  const std::size_t k = spec.k, n = spec.n;
  const Pile m = x[0];
  Position upper = x, lower = x;
  if (mu == m) {
    // slow move vs full collapse on the k largest piles
    for (std::size_t i = k; i < n; ++i) {
      upper[i] = x[i] - 1;
      lower[i] = m;
    }
  } else if (gamma <= x[k] - mu) {
    // pin pile 2 at mu, drain piles 3..k+1
    upper[1] = mu;
    lower[1] = mu;
    for (std::size_t i = 2; i <= k; ++i) {
      upper[i] = x[i] - 1;
      lower[i] = mu;
    }
  } else {
    // pin pile 1 at mu, drain piles 2..k
    upper[0] = mu;
    lower[0] = mu;
    for (std::size_t i = 1; i < k; ++i) {
      upper[i] = x[i] - 1;
      lower[i] = mu;
    }
  }
  return interpolate_y(spec, upper, lower, gamma);
}

// Type I, m <= delta < x_2: empty piles k+1..n-1 and cut pile n to delta - x_1.
Position move_small_mid(const Position& x, std::size_t k, Pile delta) {
  Position out = x;
  const std::size_t n = x.size();
  for (std::size_t i = k; i + 1 < n; ++i) out[i] = 0;
  out[n - 1] = delta - x[0];
  return out;
}

// Type I, x_2 <= delta < u - m: empty pile 1, keep piles 2..k+1, and
// redistribute A = sum_{i=2..k+1} max(0, delta - x_i) over piles k+2..n.
Position move_redistribute(const Position& x, std::size_t k, Pile delta) {
  const std::size_t n = x.size();
  Pile budget = 0;
  for (std::size_t i = 1; i <= k; ++i)
    if (delta > x[i]) budget = checked_add(budget, delta - x[i]);
  Position out = x;
  out[0] = 0;
  for (std::size_t i = n; i-- > k + 1;) {
    const Pile cap = std::min(x[i] - 1, delta);
    const Pile take = std::min(cap, budget);
    out[i] = take;
    budget -= take;
  }
  if (budget != 0)
    throw Error(Errc::Internal, "redistribution budget not exhausted");
  return out;
}

// Type I, u - m <= delta < u: trim by u - delta inside three index classes.
Position move_trim(const Position& x, std::size_t k, Pile u, Pile delta) {
  const std::size_t n = x.size();
  const Pile cut = u - delta;
  Position out = x;
  std::size_t touched = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (x[i + k] <= delta) {  // I1
      out[i] = x[i] - cut;
      ++touched;
    }
  }
  for (std::size_t i = k; i < n; ++i) {
    if (x[i] > u) {  // I3
      out[i] = delta;
      ++touched;
    } else if (x[i] > delta) {  // I2
      out[i] = x[i] - cut;
      ++touched;
    }
  }
  if (touched != k)
    throw Error(Errc::Internal, "trim classes did not partition the large piles");
  return out;
}

// Type II (and the type I small-delta targets): move to m(x') = mprime,
// y(x') = yprime with mprime <= m(x), m(x) - mprime <= yprime <= y(x)
// (yprime < y(x) when mprime == m(x)).
Position move_to_pair_type2(const GameSpec& spec, const Position& x, const SgParams& p,
                            Pile mprime, Pile yprime) {
  const std::size_t k = spec.k, n = spec.n;
  Position upper = x, lower = x;
  if (mprime == p.m) {
    for (std::size_t i = k; i < n; ++i) {
      upper[i] = x[i] - 1;
      lower[i] = p.m;
    }
  } else {
    // cap for the k-1 largest piles; m + y never underflows the pins
    const Pile cap_base = checked_add(p.m, p.y);
    const std::size_t pin = (yprime >= x[1] - mprime) ? 0 : 1;
    upper[pin] = mprime;
    lower[pin] = mprime;
    for (std::size_t i = k + 1; i < n; ++i) {
      upper[i] = std::min(x[i], cap_base) - 1;
      lower[i] = mprime;
    }
  }
  return interpolate_y(spec, upper, lower, yprime);
}

Move move_from_sorted(const SortedView& sv, const Position& succ, std::size_t k) {
  Move mv;
  for (std::size_t i = 0; i < succ.size(); ++i)
    if (succ[i] != sv.sorted[i]) mv.changes.emplace_back(sv.perm[i], succ[i]);
  if (mv.changes.size() != k)
    throw Error(Errc::Internal, "constructed move touches the wrong number of piles");
  std::sort(mv.changes.begin(), mv.changes.end());
  return mv;
}

Move bouton_move(const Position& pos, Pile delta) {
  Pile g = 0;
  for (Pile v : pos) g ^= v;
  const Pile d = g ^ delta;  // nonzero since delta < g
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if ((pos[i] ^ d) < pos[i]) {
      Move mv;
      mv.changes.emplace_back(i, pos[i] ^ d);
      return mv;
    }
  }
  throw Error(Errc::Internal, "no pile carries the top bit of the XOR gap");
}

}  // namespace

Move winning_move(const GameSpec& spec, const Position& pos, Pile delta) {
  validate(spec, pos);
  if (spec.ruleset != Ruleset::ExactK)
    throw Error(Errc::UnsupportedCase, "winning_move covers the ExactK ruleset only");
  const Pile g = sg_value(spec, pos);  // raises UnsupportedCase for 1 < k < n/2
  if (delta >= g)
    throw Error(Errc::TargetOutOfRange,
                "delta " + std::to_string(delta) + " not below the SG value " + std::to_string(g));
  if (spec.k == 1) return bouton_move(pos, delta);

  const SortedView sv = normalize(pos);
  const Position& x = sv.sorted;
  // n < 2k: SG == Tetris, and emptying the k largest reaches T == 0.
  // Same for n == 2k with an empty pile: the successor keeps m == 0, so its
  // SG value is again its Tetris value.
  if (spec.n < 2 * spec.k || x[0] == 0) return move_to_tetris(spec, pos, delta);

  const SgParams p = sg_params(spec, pos);
  Position succ;
  if (p.kind == SgType::TypeI) {
    if (delta < p.m) {
      const Pile gamma = nu_eps(delta).nu;
      const Pile mu = p.m - ((p.m - delta - 1) % (gamma + 1));
      succ = move_to_pair_type1(spec, x, mu, gamma);
    } else if (delta < x[1]) {
      succ = move_small_mid(x, spec.k, delta);
    } else if (checked_add(delta, p.m) < p.u) {
      succ = move_redistribute(x, spec.k, delta);
    } else {
      succ = move_trim(x, spec.k, p.u, delta);
    }
  } else {
    Pile mprime, yprime;
    if (delta < p.z - 1) {
      yprime = nu_eps(delta).nu;
      mprime = p.m - ((p.m - delta - 1) % (yprime + 1));
    } else {
      yprime = p.y;
      const Pile r = p.v - (p.z - 1);
      mprime = p.m - r + (delta - (p.z - 1));
    }
    succ = move_to_pair_type2(spec, x, p, mprime, yprime);
  }

  Move mv = move_from_sorted(sv, succ, spec.k);
  if (sg_value(spec, apply_move(pos, mv)) != delta)
    throw Error(Errc::Internal, "constructed move misses the target SG value");
  return mv;
}

}  // namespace nimexact
