#pragma once

#include <span>
#include <vector>

#include "matalg/pattern.hpp"

namespace matalg {

/// Disjoint 0-based blocks covering {0..n-1}; each block sorted, blocks
/// ordered by least element.
using Partition = std::vector<std::vector<int>>;

// Connectivity treats a pattern as the digraph with an arc k -> m for every
// (k, m) in it. Self-loops are ignored by every predicate here.

bool strongly_connected(Pattern const& g);
bool weakly_connected(Pattern const& g);
Partition weak_components(Pattern const& g);
/// Tarjan; blocks ordered by least element.
Partition strong_components(Pattern const& g);
/// Strongly connected, loop-free, and every arc is necessary.
bool minimal_strongly_connected(Pattern const& g);

namespace detail {

// Word-level kernels shared with the enumeration hot path. `rows` holds n
// adjacency rows, loops allowed (they never change reachability).
Pattern::Row forward_reach(std::span<Pattern::Row const> rows, int source);
Pattern::Row backward_reach(std::span<Pattern::Row const> rows, int target);
bool strongly_connected_rows(std::span<Pattern::Row const> rows);
/// Assumes the rows are loop-free.
bool minimal_strongly_connected_rows(std::span<Pattern::Row const> rows);

}  // namespace detail

}  // namespace matalg
