#include "nimexact/tetris.hpp"

#include <algorithm>

#include "nimexact/checked.hpp"
#include "nimexact/core.hpp"

namespace nimexact {

namespace {

void require_exact(const GameSpec& spec, const Position& pos) {
  validate(spec, pos);
  if (spec.ruleset != Ruleset::ExactK)
    throw Error(Errc::InvalidSpec, "the Tetris function is defined for the ExactK ruleset only");
}

struct BarShift {
  std::size_t ell;
  Pile alpha;
  Pile beta;
  Pile level;  // xbar value of column n-k+1 (1-based) == tvalue
};

// x nondecreasing. s tokens from the n-k smallest piles are poured onto the
// k largest; the first ell+1 of those end up equalized at level (+1 for the
// last beta of them).
BarShift bar_shift_sorted(const Pile* x, std::size_t n, std::size_t k) {
  Pile s = 0;
  for (std::size_t i = 0; i + k < n; ++i) s = checked_add(s, x[i]);
  std::size_t ell = 0;
  Pile s_ell = 0;
  Pile si = 0;
  for (std::size_t i = 1; i < k; ++i) {
    const Pile yi = x[n - k + i] - x[n - k + i - 1];
    si = checked_add(si, checked_mul(static_cast<Pile>(i), yi));
    if (si <= s) {
      ell = i;
      s_ell = si;
    } else {
      break;  // s_i is nondecreasing in i
    }
  }
  const Pile a = s - s_ell;
  const Pile width = static_cast<Pile>(ell) + 1;
  BarShift out;
  out.ell = ell;
  out.alpha = a / width;
  out.beta = a % width;
  out.level = checked_add(x[n - k + ell], out.alpha);
  return out;
}

}  // namespace

namespace detail {

Pile tetris_value_sorted(const Pile* x, std::size_t n, std::size_t k) {
  return bar_shift_sorted(x, n, k).level;
}

}  // namespace detail

Pile tetris_oracle(const GameSpec& spec, const Position& pos) {
  require_exact(spec, pos);
  const std::size_t n = spec.n, k = spec.k;
  Position x = pos;
  std::sort(x.begin(), x.end());
  Pile t = 0;
  while (x[n - k] > 0) {  // at least k nonzero piles
    for (std::size_t i = n - k; i < n; ++i) --x[i];
    std::sort(x.begin(), x.end());
    ++t;
  }
  return t;
}

TetrisProfile tetris_fast(const GameSpec& spec, const Position& pos, bool assume_sorted) {
  require_exact(spec, pos);
  const std::size_t n = spec.n, k = spec.k;
  Position sorted;
  const Pile* x = pos.data();
  if (!assume_sorted) {
    sorted = pos;
    std::sort(sorted.begin(), sorted.end());
    x = sorted.data();
  }
  const BarShift bs = bar_shift_sorted(x, n, k);
  TetrisProfile out;
  out.ell = bs.ell;
  out.alpha = bs.alpha;
  out.beta = bs.beta;
  out.tvalue = bs.level;
  out.xbar.assign(n, 0);
  const Pile level_plus = bs.beta > 0 ? checked_add(bs.level, 1) : bs.level;
  for (std::size_t i = n - k; i < n; ++i) {
    const std::size_t j = i - (n - k);
    if (j <= bs.ell)
      out.xbar[i] = (j + bs.beta > bs.ell) ? level_plus : bs.level;
    else
      out.xbar[i] = x[i];
  }
  return out;
}

bool tetris_certificate(const GameSpec& spec, const Position& pos, Pile g) {
  require_exact(spec, pos);
  using u128 = unsigned __int128;
  u128 at_g = 0, at_g1 = 0;
  for (Pile xi : pos) {
    at_g += std::min<u128>(xi, g);
    at_g1 += std::min<u128>(xi, u128{g} + 1);
  }
  const u128 k = spec.k;
  return k * g <= at_g && at_g1 < k * (u128{g} + 1);
}

Move move_to_tetris(const GameSpec& spec, const Position& pos, Pile g) {
  require_exact(spec, pos);
  const std::size_t n = spec.n, k = spec.k;
  const SortedView sv = normalize(pos);
  const Position& x = sv.sorted;
  const Pile t = detail::tetris_value_sorted(x.data(), n, k);
  if (t == 0 || g >= t)
    throw Error(Errc::TargetOutOfRange,
                "target Tetris value " + std::to_string(g) + " not below T=" + std::to_string(t));

  // Kept-token totals between the envelopes: 0 empties the k largest,
  // upper is the slow move (each pile minus one).
  Pile upper_total = 0;
  for (std::size_t i = n - k; i < n; ++i)
    upper_total = checked_add(upper_total, x[i] - 1);  // x[i] >= 1 since t > 0

  // Fill M tokens into the k largest, smallest sorted index first, capped at
  // x[i]-1. Fills are nested, so the Tetris value of the candidate is
  // nondecreasing in M with unit steps.
  Position scratch = x;
  auto eval = [&](Pile total) {
    Pile remaining = total;
    for (std::size_t i = n - k; i < n; ++i) {
      const Pile cap = x[i] - 1;
      const Pile put = std::min(cap, remaining);
      scratch[i] = put;
      remaining -= put;
    }
    std::sort(scratch.begin(), scratch.end());
    const Pile value = detail::tetris_value_sorted(scratch.data(), n, k);
    // restore bottom ordering for the next round
    std::copy(x.begin(), x.end(), scratch.begin());
    return value;
  };

  if (eval(0) > g)
    throw Error(Errc::TargetOutOfRange,
                "target " + std::to_string(g) + " below the reachable interval");
  Pile lo = 0, hi = upper_total;
  while (lo < hi) {
    const Pile mid = lo + (hi - lo) / 2;
    if (eval(mid) >= g)
      hi = mid;
    else
      lo = mid + 1;
  }
  if (eval(lo) != g)
    throw Error(Errc::Internal, "bisection failed to land on the target Tetris value");

  Move mv;
  Pile remaining = lo;
  for (std::size_t i = n - k; i < n; ++i) {
    const Pile cap = x[i] - 1;
    const Pile put = std::min(cap, remaining);
    remaining -= put;
    mv.changes.emplace_back(sv.perm[i], put);
  }
  std::sort(mv.changes.begin(), mv.changes.end());
  return mv;
}

}  // namespace nimexact
