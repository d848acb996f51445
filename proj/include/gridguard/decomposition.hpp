#pragma once

#include "gridguard/arrangement.hpp"

#include <vector>

namespace gridguard {

enum class Strategy { Paper1, Paper2, Trapezoid, Grid };

struct DecompositionConfig {
  Strategy strategy = Strategy::Paper1;
  unsigned k = 0;               // refinement iterations (Paper1/Paper2), capped at 3
  unsigned grid_resolution = 8; // Grid only: subdivisions per axis
  size_t max_cells = kDefaultMaxCells;
};

// One spanning convex region: a cell of the decomposition plus the point
// that stands in for it in the set-cover ground set.
struct ScRegion {
  int id = 0;
  ConvexRegion cell;
  Point representative;  // vertex centroid, strictly interior
};

// Deduplicated lines through every pair of distinct vertices of P. Includes
// every edge-supporting line.
std::vector<Line> vertex_lines(const SimplePolygon& P);

// One refinement round: adds the lines through every pair of cell vertices
// of the current arrangement (cell vertices = in-polygon intersection points
// plus polygon vertices), and with `triangle_rule` the three midpoint-to-
// opposite-vertex lines of every triangular cell. Validates that the refined
// arrangement stays within `max_cells`.
std::vector<Line> refine_once(const std::vector<Line>& lines, const SimplePolygon& P, bool triangle_rule,
                              size_t max_cells = kDefaultMaxCells);

std::vector<ScRegion> build_sc_regions(const SimplePolygon& P, const DecompositionConfig& cfg);

}  // namespace gridguard
