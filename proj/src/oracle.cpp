#include "nimexact/oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "nimexact/core.hpp"

namespace nimexact {

namespace {

// Enumerate every way to strictly decrease the piles selected in `chosen`,
// collecting each resulting sorted position once.
void collect_reductions(const Position& pos, const std::vector<std::size_t>& chosen,
                        std::set<Position>& out) {
  Position work = pos;
  // Odometer over new values in [0, pos[i]-1] for each chosen pile.
  std::vector<Pile> vals(chosen.size(), 0);
  while (true) {
    for (std::size_t j = 0; j < chosen.size(); ++j) work[chosen[j]] = vals[j];
    Position sorted = work;
    std::sort(sorted.begin(), sorted.end());
    out.insert(std::move(sorted));
    std::size_t j = 0;
    for (; j < vals.size(); ++j) {
      if (vals[j] + 1 < pos[chosen[j]]) {
        ++vals[j];
        std::fill(vals.begin(), vals.begin() + j, Pile{0});
        break;
      }
    }
    if (j == vals.size()) break;
  }
  for (std::size_t idx : chosen) work[idx] = pos[idx];
}

void for_each_subset(std::size_t n, std::size_t size,
                     const Position& pos, std::set<Position>& out) {
  // Standard combination enumeration; skip subsets containing an empty pile.
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    bool all_nonzero = true;
    for (std::size_t i : idx)
      if (pos[i] == 0) { all_nonzero = false; break; }
    if (all_nonzero) collect_reductions(pos, idx, out);
    std::size_t j = size;
    while (j-- > 0) {
      if (idx[j] + (size - j) < n) {
        ++idx[j];
        for (std::size_t t = j + 1; t < size; ++t) idx[t] = idx[t - 1] + 1;
        break;
      }
      if (j == 0) return;
    }
  }
}

}  // namespace

std::vector<Position> successors(const GameSpec& spec, const Position& pos) {
  validate(spec, pos);
  std::set<Position> out;
  if (spec.ruleset == Ruleset::ExactK) {
    for_each_subset(spec.n, spec.k, pos, out);
  } else {
    for (std::size_t size = 1; size <= spec.k; ++size)
      for_each_subset(spec.n, size, pos, out);
  }
  return {out.begin(), out.end()};
}

unsigned mex(std::vector<unsigned> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  unsigned m = 0;
  for (unsigned v : values) {
    if (v != m) break;
    ++m;
  }
  return m;
}

SgOracle::SgOracle(GameSpec spec, std::size_t budget)
    : spec_(std::move(spec)), budget_(budget) {}

unsigned SgOracle::value(const Position& pos) {
  validate(spec_, pos);
  Position key = pos;
  std::sort(key.begin(), key.end());
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  if (cache_.size() >= budget_)
    throw Error(Errc::BudgetExceeded, "oracle position budget exhausted");
  std::vector<unsigned> child_values;
  for (const Position& succ : successors(spec_, key))
    child_values.push_back(value(succ));
  const unsigned g = mex(std::move(child_values));
  cache_.emplace(std::move(key), g);
  return g;
}

unsigned sg_brute(const GameSpec& spec, const Position& pos, std::size_t budget) {
  SgOracle oracle(spec, budget);
  return oracle.value(pos);
}

bool next_sorted(Position& pos, Pile max_pile) {
  std::size_t j = pos.size();
  while (j-- > 0) {
    if (pos[j] < max_pile) {
      ++pos[j];
      for (std::size_t t = j + 1; t < pos.size(); ++t) pos[t] = pos[j];
      return true;
    }
    if (j == 0) break;
  }
  std::fill(pos.begin(), pos.end(), Pile{0});
  return false;
}

std::vector<TableRow> build_table(const GameSpec& spec, Pile max_pile,
                                  std::size_t budget) {
  SgOracle oracle(spec, budget);
  std::vector<TableRow> rows;
  Position pos(spec.n, 0);
  do {
    rows.push_back({pos, oracle.value(pos)});
  } while (next_sorted(pos, max_pile));
  return rows;
}

std::string table_to_csv(const std::vector<TableRow>& rows,
                         const std::string& source) {
  std::ostringstream os;
  os << "pos,sg,source\n";
  for (const TableRow& row : rows) {
    for (std::size_t i = 0; i < row.pos.size(); ++i) {
      if (i) os << ';';
      os << row.pos[i];
    }
    os << ',' << row.sg << ',' << source << '\n';
  }
  return os.str();
}

}  // namespace nimexact
