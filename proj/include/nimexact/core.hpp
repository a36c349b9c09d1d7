#pragma once

#include "nimexact/types.hpp"

namespace nimexact {

// Throws DimensionMismatch / InvalidSpec when spec and position disagree.
void validate(const GameSpec& spec, const Position& pos);

// Stable nondecreasing sort with index tracking.
SortedView normalize(const Position& pos);

// Legality against the ruleset: ExactK touches exactly k piles,
// MooreAtMostK between 1 and k; every touched pile strictly decreases.
// Malformed index sets yield false, never an exception.
bool is_legal_move(const GameSpec& spec, const Position& from, const Move& mv);

// Successor position. Throws IllegalMove on out-of-range indices,
// duplicate indices, or non-decreasing assignments.
Position apply_move(const Position& from, const Move& mv);

// Text format: comma-separated decimal pile sizes, e.g. "1,2,2,3,4,4,7".
Position parse_position(const std::string& text);
std::string format_position(const Position& pos);

Move make_move(std::initializer_list<std::pair<std::size_t, Pile>> changes);

}  // namespace nimexact
