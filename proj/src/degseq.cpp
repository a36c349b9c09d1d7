#include "nimexact/degseq.hpp"

#include <algorithm>
#include <numeric>

#include "nimexact/core.hpp"
#include "nimexact/tetris.hpp"

namespace nimexact {

namespace {

GameSpec exact_spec(const Position& degrees, std::size_t k) {
  return GameSpec{degrees.size(), k, Ruleset::ExactK};
}

unsigned __int128 total_of(const Position& degrees) {
  unsigned __int128 total = 0;
  for (Pile v : degrees) total += v;
  return total;
}

void require_valid(const Position& degrees, std::size_t k) {
  if (degrees.empty() || k < 1)
    throw Error(Errc::InvalidSpec, "need at least one vertex and k >= 1");
}

struct Greedy {
  explicit Greedy(const Position& degrees) : work(degrees), order(degrees.size()) {
    std::iota(order.begin(), order.end(), std::size_t{0});
  }

  Position work;
  std::vector<std::size_t> order;  // indices by descending degree, ties to larger index

  void resort() {
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return work[a] != work[b] ? work[a] > work[b] : a > b;
    });
  }

  // Multiplicity with which the current k largest can be taken as one batch
  // of slow moves while staying a valid k-largest choice throughout.
  Pile batch_size(std::size_t k) const {
    const Pile chosen_min = work[order[k - 1]];
    const Pile next_max = k < work.size() ? work[order[k]] : Pile{0};
    const Pile gap = chosen_min - next_max;
    return gap > 0 ? gap : Pile{1};
  }

  void take(std::size_t k, Pile count) {
    for (std::size_t i = 0; i < k; ++i) work[order[i]] -= count;
  }
};

}  // namespace

bool is_realizable(const Position& degrees, std::size_t k) {
  require_valid(degrees, k);
  const unsigned __int128 total = total_of(degrees);
  if (k > degrees.size()) return total == 0;
  if (total % k != 0) return false;
  const Pile t = tetris_fast(exact_spec(degrees, k), degrees).tvalue;
  return static_cast<unsigned __int128>(t) * k == total;
}

Hypergraph realize(const Position& degrees, std::size_t k, std::size_t max_edges) {
  if (!is_realizable(degrees, k))
    throw Error(Errc::NotRealizable, "vector is not a k-uniform degree sequence");
  Hypergraph edges;
  Greedy greedy(degrees);
  unsigned __int128 emitted = 0;
  while (true) {
    greedy.resort();
    if (greedy.work[greedy.order[0]] == 0) break;
    if (greedy.work[greedy.order[k - 1]] == 0)
      throw Error(Errc::Internal, "greedy schedule stalled on a realizable sequence");
    const Pile count = greedy.batch_size(k);
    emitted += count;
    if (emitted > max_edges)
      throw Error(Errc::BudgetExceeded, "edge budget exhausted");
    std::vector<std::size_t> edge(greedy.order.begin(), greedy.order.begin() + k);
    std::sort(edge.begin(), edge.end());
    for (Pile c = 0; c < count; ++c) edges.push_back(edge);
    greedy.take(k, count);
  }
  return edges;
}

Position minimal_correction(const Position& degrees, std::size_t k) {
  require_valid(degrees, k);
  if (k > degrees.size()) return Position(degrees.size(), 0);
  Pile remaining = tetris_fast(exact_spec(degrees, k), degrees).tvalue;
  Greedy greedy(degrees);
  while (remaining > 0) {
    greedy.resort();
    if (greedy.work[greedy.order[k - 1]] == 0)
      throw Error(Errc::Internal, "greedy schedule ended before the tetris value");
    const Pile count = std::min(greedy.batch_size(k), remaining);
    greedy.take(k, count);
    remaining -= count;
  }
  Position out(degrees.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = degrees[i] - greedy.work[i];
  return out;
}

}  // namespace nimexact
