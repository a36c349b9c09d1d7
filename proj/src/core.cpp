#include "nimexact/core.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace nimexact {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::IllegalMove: return "IllegalMove";
    case Errc::Overflow: return "Overflow";
    case Errc::TargetOutOfRange: return "TargetOutOfRange";
    case Errc::UnsupportedCase: return "UnsupportedCase";
    case Errc::RangeViolation: return "RangeViolation";
    case Errc::PrePositionError: return "PrePositionError";
    case Errc::NotRealizable: return "NotRealizable";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

void validate(const GameSpec& spec, const Position& pos) {
  if (spec.n < 1 || spec.k < 1 || spec.k > spec.n)
    throw Error(Errc::InvalidSpec,
                "spec requires 1 <= k <= n, got n=" + std::to_string(spec.n) +
                    " k=" + std::to_string(spec.k));
  if (pos.size() != spec.n)
    throw Error(Errc::DimensionMismatch,
                "position has " + std::to_string(pos.size()) + " piles, spec has n=" +
                    std::to_string(spec.n));
}

SortedView normalize(const Position& pos) {
  SortedView view;
  view.perm.resize(pos.size());
  std::iota(view.perm.begin(), view.perm.end(), std::size_t{0});
  std::stable_sort(view.perm.begin(), view.perm.end(),
                   [&pos](std::size_t a, std::size_t b) { return pos[a] < pos[b]; });
  view.sorted.reserve(pos.size());
  for (std::size_t idx : view.perm) view.sorted.push_back(pos[idx]);
  return view;
}

namespace {

// Index set well-formed and all assignments strictly decreasing.
bool changes_well_formed(const Position& from, const Move& mv) {
  std::size_t prev = 0;
  bool first = true;
  for (const auto& [idx, val] : mv.changes) {
    if (idx >= from.size()) return false;
    if (!first && idx <= prev) return false;
    if (val >= from[idx]) return false;
    prev = idx;
    first = false;
  }
  return true;
}

}  // namespace

bool is_legal_move(const GameSpec& spec, const Position& from, const Move& mv) {
  if (from.size() != spec.n) return false;
  if (!changes_well_formed(from, mv)) return false;
  const std::size_t touched = mv.changes.size();
  if (spec.ruleset == Ruleset::ExactK) return touched == spec.k;
  return touched >= 1 && touched <= spec.k;
}

Position apply_move(const Position& from, const Move& mv) {
  if (!changes_well_formed(from, mv))
    throw Error(Errc::IllegalMove, "move does not strictly reduce distinct in-range piles");
  Position out = from;
  for (const auto& [idx, val] : mv.changes) out[idx] = val;
  return out;
}

Position parse_position(const std::string& text) {
  Position out;
  const char* p = text.data();
  const char* end = p + text.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
    Pile value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc{} || next == p)
      throw Error(Errc::InvalidSpec, "cannot parse position '" + text + "'");
    out.push_back(value);
    p = next;
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
    if (p < end) {
      if (*p != ',')
        throw Error(Errc::InvalidSpec, "cannot parse position '" + text + "'");
      ++p;
    }
  }
  if (out.empty())
    throw Error(Errc::InvalidSpec, "empty position");
  return out;
}

std::string format_position(const Position& pos) {
  std::ostringstream out;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (i) out << ',';
    out << pos[i];
  }
  return out.str();
}

Move make_move(std::initializer_list<std::pair<std::size_t, Pile>> changes) {
  Move mv;
  mv.changes.assign(changes.begin(), changes.end());
  std::sort(mv.changes.begin(), mv.changes.end());
  return mv;
}

}  // namespace nimexact
