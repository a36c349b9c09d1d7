#pragma once

#include <cstddef>
#include <vector>

#include "nimexact/types.hpp"

namespace nimexact {

// A k-uniform multi-hypergraph realization: each edge is a sorted list of k
// distinct 0-based vertex indices.
using Hypergraph = std::vector<std::vector<std::size_t>>;

// A vector x is the degree sequence of some k-uniform multi-hypergraph on n
// vertices exactly when k divides the total and the exact-k tetris value
// matches total/k. For k > n no edge exists, so only the zero vector
// qualifies.
bool is_realizable(const Position& degrees, std::size_t k);

// Construct such a hypergraph (greedy: repeatedly take the k currently
// largest degrees as an edge, with multiplicity batching; ties go to the
// larger index).  Throws NotRealizable if none exists and BudgetExceeded
// past `max_edges` edges.
Hypergraph realize(const Position& degrees, std::size_t k,
                   std::size_t max_edges = 10'000'000);

// Largest componentwise-dominated realizable vector: run the greedy slow-move
// schedule for its full length and keep what it consumed.  Returns `degrees`
// itself when already realizable.
Position minimal_correction(const Position& degrees, std::size_t k);

}  // namespace nimexact
