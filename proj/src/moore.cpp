#include "nimexact/moore.hpp"

#include <algorithm>

#include "nimexact/checked.hpp"
#include "nimexact/core.hpp"

namespace nimexact {

namespace {

void require_moore(const GameSpec& spec, const Position& pos) {
  validate(spec, pos);
  if (spec.ruleset != Ruleset::MooreAtMostK)
    throw Error(Errc::InvalidSpec, "Moore's function is defined for the MooreAtMostK ruleset");
}

unsigned bit_width_of(const Position& pos) {
  Pile all = 0;
  for (Pile v : pos) all |= v;
  unsigned width = 0;
  while (all) {
    ++width;
    all >>= 1;
  }
  return width;
}

std::vector<unsigned> residues(const Position& pos, std::size_t k, unsigned width) {
  std::vector<unsigned> y(width, 0);
  for (unsigned j = 0; j < width; ++j) {
    unsigned count = 0;
    for (Pile v : pos) count += static_cast<unsigned>((v >> j) & 1);
    y[j] = count % static_cast<unsigned>(k + 1);
  }
  return y;
}

// Shared state of the section-4 constructions: working values w (start at x,
// always w[i] < x[i] once i joins the index set) and the set itself.
struct Builder {
  explicit Builder(const Position& x) : w(x), in_set(x.size(), false) {}

  Position w;
  std::vector<bool> in_set;

  std::size_t alpha() const {
    return static_cast<std::size_t>(std::count(in_set.begin(), in_set.end(), true));
  }
  std::size_t beta(unsigned bit) const {
    std::size_t count = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (in_set[i] && ((w[i] >> bit) & 1)) ++count;
    return count;
  }
  // Flip `count` bits at `bit` among set members whose bit equals `from`,
  // lowest index first.
  void flip_members(unsigned bit, bool from, std::size_t count) {
    for (std::size_t i = 0; i < w.size() && count > 0; ++i) {
      if (!in_set[i]) continue;
      if (((w[i] >> bit) & 1) != static_cast<Pile>(from)) continue;
      w[i] ^= Pile{1} << bit;
      --count;
    }
    if (count != 0) throw Error(Errc::Internal, "not enough set members to flip");
  }
  // Recruit `count` outside indices whose bit is set, clearing it;
  // lowest index first.
  void recruit(unsigned bit, std::size_t count) {
    for (std::size_t i = 0; i < w.size() && count > 0; ++i) {
      if (in_set[i] || !((w[i] >> bit) & 1)) continue;
      in_set[i] = true;
      w[i] ^= Pile{1} << bit;
      --count;
    }
    if (count != 0) throw Error(Errc::Internal, "not enough outside indices with the bit set");
  }

  Move to_move(const Position& x) const {
    Move mv;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!in_set[i]) continue;
      if (w[i] >= x[i]) throw Error(Errc::Internal, "set member did not strictly decrease");
      mv.changes.emplace_back(i, w[i]);
    }
    return mv;
  }
};

// One iteration of the Step-1 case analysis at `bit` with residue y_t.
// The three cases are exclusive and exhaustive; this is asserted, not trusted.
void step_cases(Builder& b, std::size_t k, unsigned bit, unsigned yt) {
  const std::size_t alpha = b.alpha();
  const std::size_t beta = b.beta(bit);
  if (yt <= beta) {
    b.flip_members(bit, true, yt);  // clear y_t ones inside the set
  } else if (k + 1 - yt <= alpha - beta) {
    b.flip_members(bit, false, k + 1 - yt);  // set (k+1)-y_t zeros inside the set
  } else if (yt - beta <= k - alpha) {
    b.recruit(bit, yt - beta);       // grow the set by y_t - beta fresh ones
    b.flip_members(bit, true, beta);  // and clear the old ones too
  } else {
    throw Error(Errc::Internal, "step-1 cases failed to cover the residue");
  }
}

}  // namespace

MooreDigits moore_m(const GameSpec& spec, const Position& pos) {
  require_moore(spec, pos);
  MooreDigits out;
  const unsigned width = bit_width_of(pos);
  out.bits.assign(pos.size(), std::vector<std::uint8_t>(width, 0));
  for (std::size_t i = 0; i < pos.size(); ++i)
    for (unsigned j = 0; j < width; ++j)
      out.bits[i][j] = static_cast<std::uint8_t>((pos[i] >> j) & 1);
  out.ydigits = residues(pos, spec.k, width);
  out.mvalue = 0;
  Pile base = 1;
  for (unsigned j = 0; j < width; ++j) {
    if (out.ydigits[j] != 0)
      out.mvalue = checked_add(out.mvalue, checked_mul(out.ydigits[j], base));
    if (j + 1 < width) base = checked_mul(base, static_cast<Pile>(spec.k + 1));
  }
  return out;
}

Move moore_move_to_zero(const GameSpec& spec, const Position& pos) {
  require_moore(spec, pos);
  const unsigned width = bit_width_of(pos);
  const std::vector<unsigned> y = residues(pos, spec.k, width);
  if (std::all_of(y.begin(), y.end(), [](unsigned v) { return v == 0; }))
    throw Error(Errc::PrePositionError, "position already has M == 0");

  Builder b(pos);
  for (unsigned j = width; j-- > 0;)
    if (y[j] != 0) step_cases(b, spec.k, j, y[j]);

  Move mv = b.to_move(pos);
  if (mv.changes.empty() || mv.changes.size() > spec.k)
    throw Error(Errc::Internal, "index set size out of the 1..k range");
  const std::vector<unsigned> check = residues(b.w, spec.k, bit_width_of(b.w));
  if (!std::all_of(check.begin(), check.end(), [](unsigned v) { return v == 0; }))
    throw Error(Errc::Internal, "constructed successor does not have M == 0");
  return mv;
}

Move moore_move_to_one(const GameSpec& spec, const Position& pos) {
  require_moore(spec, pos);
  const unsigned width = bit_width_of(pos);
  const std::vector<unsigned> y = residues(pos, spec.k, width);
  const bool high_clear =
      std::all_of(y.begin() + std::min<std::size_t>(1, y.size()), y.end(),
                  [](unsigned v) { return v == 0; });
  const unsigned y0 = width > 0 ? y[0] : 0;
  if (high_clear && y0 <= 1)
    throw Error(Errc::PrePositionError, "position already has M <= 1");

  Builder b(pos);
  for (unsigned j = width; j-- > 1;)
    if (y[j] != 0) step_cases(b, spec.k, j, y[j]);

  // bit 0: seven cases, exclusive and exhaustive
  const std::size_t k = spec.k;
  const std::size_t alpha = b.alpha();
  const std::size_t beta = b.beta(0);
  if (y0 > 1 && y0 - 1 <= beta) {
    b.flip_members(0, true, y0 - 1);
  } else if (y0 > 1 && k + 2 - y0 <= alpha - beta) {
    b.flip_members(0, false, k + 2 - y0);
  } else if (y0 > 1 && y0 - 1 - beta <= k - alpha) {
    b.recruit(0, y0 - 1 - beta);
    b.flip_members(0, true, beta);
  } else if (y0 == 0 && alpha > beta) {
    b.flip_members(0, false, 1);
  } else if (y0 == 0 && alpha == beta && alpha == k) {
    b.flip_members(0, true, k);
  } else if (y0 == 0 && alpha == beta && alpha < k) {
    b.recruit(0, k - alpha);
    b.flip_members(0, true, alpha);
  } else if (y0 == 1) {
    // nothing to do at bit 0
  } else {
    throw Error(Errc::Internal, "bit-0 cases failed to cover the residue");
  }

  Move mv = b.to_move(pos);
  if (mv.changes.empty() || mv.changes.size() > spec.k)
    throw Error(Errc::Internal, "index set size out of the 1..k range");
  const std::vector<unsigned> check = residues(b.w, spec.k, bit_width_of(b.w));
  bool m_is_one = !check.empty() && check[0] == 1;
  for (std::size_t j = 1; j < check.size() && m_is_one; ++j)
    if (check[j] != 0) m_is_one = false;
  if (!m_is_one)
    throw Error(Errc::Internal, "constructed successor does not have M == 1");
  return mv;
}

}  // namespace nimexact
