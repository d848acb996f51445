#pragma once

#include "gridguard/decomposition.hpp"
#include "gridguard/geometry.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace gridguard::oracle {

// Brute-force ground truth used by the property tests. Everything in here is
// written against raw coordinates plus the `orientation` primitive; it shares
// no other code path with the modules it cross-checks.

bool oracle_sees(const SimplePolygon& P, const Point& p, const Point& q);

struct SampleSet {
  std::vector<Point> points;  // strictly interior, reproducible from the seed
  uint64_t seed = 0;
};

SampleSet sample_polygon(const SimplePolygon& P, size_t count, uint64_t seed);
SampleSet sample_convex(const ConvexRegion& region, size_t count, uint64_t seed);

// ids of cells that are area-visible from p: every sample and every inward-
// nudged vertex of the cell is seen. Nudging moves a vertex toward the
// vertex centroid at parameter 1/1024.
std::vector<int> oracle_visible_list(const SimplePolygon& P, const Point& p,
                                     const std::vector<ScRegion>& cells, size_t per_cell_samples,
                                     uint64_t seed);

// (face count, total face area) of the arrangement inside `clip`, computed
// by segment counting and the Euler relation instead of face construction.
std::pair<size_t, Scalar> oracle_arrangement_count(const std::vector<Line>& lines,
                                                   const SimplePolygon& clip);

}  // namespace gridguard::oracle
