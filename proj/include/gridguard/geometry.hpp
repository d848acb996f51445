#pragma once

#include "gridguard/errors.hpp"
#include "gridguard/scalar.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace gridguard {

enum class Orientation { CW = -1, Collinear = 0, CCW = 1 };

struct Point {
  Scalar x, y;

  Point() : x(0), y(0) {}
  Point(Scalar px, Scalar py) : x(std::move(px)), y(std::move(py)) {}
  Point(int px, int py) : x(px), y(py) {}

  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point& o) const { return !(*this == o); }
  // lexicographic: x first, then y
  bool operator<(const Point& o) const { return x < o.x || (x == o.x && y < o.y); }
};

// Cross product (q - p) x (r - p); the base of every predicate here.
Scalar cross(const Point& p, const Point& q, const Point& r);
Orientation orientation(const Point& p, const Point& q, const Point& r);

Point midpoint(const Point& a, const Point& b);

// true iff p lies on the closed segment [a, b]
bool on_segment(const Point& p, const Point& a, const Point& b);

// true iff the open segments (p,q) and (c,d) cross at a single interior point
bool segments_properly_cross(const Point& p, const Point& q, const Point& c, const Point& d);

struct Segment {
  Point a, b;

  // Throws DegenerateInput on a == b.
  static Segment make(Point a, Point b);

  bool operator==(const Segment& o) const { return a == o.a && b == o.b; }
  // endpoint-order-insensitive equality
  bool same_unordered(const Segment& o) const;
};

// Line A*x + B*y + C = 0 in canonical form: the first nonzero of (A, B) is
// scaled to 1, so equal lines always compare equal and dedup by ordering
// works.
struct Line {
  Scalar a, b, c;

  static Line from_coefficients(Scalar A, Scalar B, Scalar C);  // throws DegenerateInput on A=B=0
  static Line through(const Point& p, const Point& q);          // throws DegenerateInput on p == q

  Scalar eval(const Point& p) const { return a * p.x + b * p.y + c; }
  int side(const Point& p) const { return sign_of(eval(p)); }
  bool contains(const Point& p) const { return side(p) == 0; }

  bool operator==(const Line& o) const { return a == o.a && b == o.b && c == o.c; }
  bool operator<(const Line& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return c < o.c;
  }
};

// Unique intersection point, or empty when parallel (identical included).
std::optional<Point> line_intersection(const Line& l1, const Line& l2);

struct HalfLine {
  Point origin;
  Scalar dx, dy;

  static HalfLine make(Point origin, Scalar dx, Scalar dy);  // throws DegenerateInput on zero direction
  static HalfLine from_towards(const Point& origin, const Point& towards);
};

enum class KeepSide {
  Left,   // keep eval >= 0
  Right,  // keep eval <= 0
};

enum class Location { Inside, Boundary, Outside };

// Convex polygon, counter-clockwise, strictly convex (no collinear triples),
// positive area. Vertex ring starts at the lexicographically smallest vertex
// so equal regions compare equal.
class ConvexRegion {
 public:
  // Cleans a CCW ring (drops repeats and collinear middles) and validates.
  // Returns empty for anything without positive area or with a CW turn.
  static std::optional<ConvexRegion> make(std::vector<Point> ring);

  const std::vector<Point>& vertices() const { return verts_; }
  size_t size() const { return verts_.size(); }

  Scalar area() const;
  // Average of the vertices; strictly interior for a strictly convex region.
  Point centroid() const;
  Location locate(const Point& p) const;
  bool contains(const Point& p) const { return locate(p) != Location::Outside; }

  std::optional<ConvexRegion> clip_halfplane(const Line& boundary, KeepSide keep) const;
  // Pieces on the negative / positive side of the line (either may be empty).
  std::pair<std::optional<ConvexRegion>, std::optional<ConvexRegion>> split_by_line(const Line& ln) const;

  // all supporting lines of the edges, in ring order
  std::vector<Line> edge_lines() const;
  std::vector<Segment> edges() const;

  void bounding_box(Point& lo, Point& hi) const;

  bool operator==(const ConvexRegion& o) const { return verts_ == o.verts_; }

 private:
  std::vector<Point> verts_;
};

std::optional<ConvexRegion> clip_convex_by_halfplane(const ConvexRegion& region, const Line& boundary,
                                                     KeepSide keep_side);

// Simple polygon, counter-clockwise, no holes. `make` validates simplicity
// (O(n^2) pairwise edge test) and reverses clockwise input; `unchecked`
// skips validation and is used for derived boundaries (visibility polygons
// may be weakly simple at grazing configurations).
class SimplePolygon {
 public:
  static SimplePolygon make(std::vector<Point> ring);
  static SimplePolygon unchecked(std::vector<Point> ring);

  const std::vector<Point>& vertices() const { return verts_; }
  size_t size() const { return verts_.size(); }

  Scalar area() const;
  Location locate(const Point& p) const;
  bool contains(const Point& p) const { return locate(p) != Location::Outside; }

  std::vector<Segment> edges() const;
  std::vector<Line> edge_lines() const;
  const Point& vertex(size_t i) const { return verts_[i % verts_.size()]; }

  // indices of vertices with interior angle > pi
  std::vector<size_t> reflex_vertices() const;

  void bounding_box(Point& lo, Point& hi) const;

  bool operator==(const SimplePolygon& o) const { return verts_ == o.verts_; }

 private:
  std::vector<Point> verts_;
};

// Exact point-in-polygon on an arbitrary closed ring (boundary reported
// separately). Shared by SimplePolygon and the visibility code.
Location locate_in_ring(const std::vector<Point>& ring, const Point& p);

Scalar ring_signed_area(const std::vector<Point>& ring);

// Convex region entirely inside a (weakly) simple polygon ring, boundary
// contact allowed.
bool convex_inside_ring(const ConvexRegion& region, const std::vector<Point>& ring);

}  // namespace gridguard
