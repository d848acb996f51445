#pragma once

#include "gridguard/geometry.hpp"

#include <vector>

namespace gridguard {

inline constexpr size_t kDefaultMaxCells = 50000;

// All cells obtained by cutting `seed` with every line that properly crosses
// a cell interior. Deterministic: lines are applied in the given order.
// Throws CellBudgetExceeded when the live cell count passes `max_cells`.
std::vector<ConvexRegion> split_convex_by_lines(const ConvexRegion& seed, const std::vector<Line>& lines,
                                                size_t max_cells);

// Bounded faces of the line arrangement whose interiors lie inside `clip`.
// Requires every edge-supporting line of `clip` to be present in `lines`
// (then no face straddles the clip boundary); throws PreconditionViolated
// otherwise. Faces are convex, interior-disjoint, tile `clip` exactly, and
// come sorted by their lexicographically smallest vertex.
std::vector<ConvexRegion> arrangement_faces(const std::vector<Line>& lines, const SimplePolygon& clip,
                                            size_t max_cells = kDefaultMaxCells);

// canonical sorted set of lines (dedup included)
std::vector<Line> dedup_lines(std::vector<Line> lines);

}  // namespace gridguard
