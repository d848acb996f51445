#pragma once

#include "gridguard/arrangement.hpp"
#include "gridguard/geometry.hpp"

#include <vector>

namespace gridguard {

// Visibility inside P. Two points see each other when the segment between
// them stays inside the closed polygon, with two boundary refinements:
// running along an edge or touching a vertex with an endpoint counts as
// visible (grazing), while passing through a vertex mid-segment with both
// incident edges off the sightline blocks (the segment squeezes through a
// reflex pinch). Throws InputOutsidePolygon.
bool sees(const SimplePolygon& P, const Point& p, const Point& q);

// true iff segment [a,b] lies in closed P (pinch contacts allowed)
bool segment_in_polygon(const SimplePolygon& P, const Point& a, const Point& b);

struct VisibilityPolygon {
  SimplePolygon region;  // star-shaped about the viewpoint; weakly simple
  Point viewpoint;

  bool contains(const Point& p) const { return locate_in_ring(region.vertices(), p) != Location::Outside; }
};

// Maximal sub-polygon of P visible from q (closed-region convention; the
// boundary is resolved by the grazing rule).
VisibilityPolygon visibility_polygon(const SimplePolygon& P, const Point& q);

// Points of P visible from every point of a segment. Realized as
// VP(a) n VP(b): in a holeless polygon a point seeing both endpoints spans
// a triangle whose boundary lies in P, so it sees the whole segment.
struct CompleteVisibilityRegion {
  Segment segment;
  VisibilityPolygon from_a, from_b;

  bool contains(const Point& p) const { return from_a.contains(p) && from_b.contains(p); }
  bool contains_region(const ConvexRegion& r) const;

  // exact convex tiling of the intersection; empty when the region is empty
  std::vector<ConvexRegion> decompose(size_t max_cells = kDefaultMaxCells) const;
};

CompleteVisibilityRegion complete_visibility_polygon(const SimplePolygon& P, const Segment& s);

}  // namespace gridguard
