#pragma once

#include <vector>

#include "minids/neighborhood.hpp"

namespace minids {

/// Same-size exchange: drop solution vertex x, add its 1-tight neighbor v.
struct PlateauMove {
    Vertex drop;
    Vertex add;
    friend bool operator==(const PlateauMove&, const PlateauMove&) = default;
};

/// All exchanges (x, v) with v 1-tight, x its solution neighbor, and v
/// adjacent to every other member of F({x}), in T1 section order.
/// Requires S maximal.
std::vector<PlateauMove> enumerate_plateau_moves(SolutionState& state);

/// For each plateau move: apply it, run local search, keep the result if it
/// is strictly smaller (and start over from there), otherwise undo it.
/// Ties return to the entry solution. Returns false if the deadline
/// interrupted the search.
bool plateau_search(SolutionState& state, int k, NeighborhoodSearch& search, const Deadline& deadline = {});
bool plateau_search(SolutionState& state, int k, const Deadline& deadline = {});

} // namespace minids
