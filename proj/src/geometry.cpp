#include "gridguard/geometry.hpp"

#include <algorithm>

namespace gridguard {

Scalar cross(const Point& p, const Point& q, const Point& r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

Orientation orientation(const Point& p, const Point& q, const Point& r) {
  switch (sign_of(cross(p, q, r))) {
    case 1:
      return Orientation::CCW;
    case -1:
      return Orientation::CW;
    default:
      return Orientation::Collinear;
  }
}

Point midpoint(const Point& a, const Point& b) { return {(a.x + b.x) / 2, (a.y + b.y) / 2}; }

bool on_segment(const Point& p, const Point& a, const Point& b) {
  if (orientation(a, b, p) != Orientation::Collinear) return false;
  if (a.x != b.x) return (a.x <= p.x && p.x <= b.x) || (b.x <= p.x && p.x <= a.x);
  return (a.y <= p.y && p.y <= b.y) || (b.y <= p.y && p.y <= a.y);
}

bool segments_properly_cross(const Point& p, const Point& q, const Point& c, const Point& d) {
  int o1 = sign_of(cross(p, q, c));
  int o2 = sign_of(cross(p, q, d));
  int o3 = sign_of(cross(c, d, p));
  int o4 = sign_of(cross(c, d, q));
  return o1 * o2 < 0 && o3 * o4 < 0;
}

Segment Segment::make(Point a, Point b) {
  if (a == b) throw DegenerateInput("segment endpoints coincide");
  return Segment{std::move(a), std::move(b)};
}

bool Segment::same_unordered(const Segment& o) const {
  return (a == o.a && b == o.b) || (a == o.b && b == o.a);
}

Line Line::from_coefficients(Scalar A, Scalar B, Scalar C) {
  if (A == 0 && B == 0) throw DegenerateInput("line with zero normal");
  Line ln;
  if (A != 0) {
    ln.a = 1;
    ln.b = B / A;
    ln.c = C / A;
  } else {
    ln.a = 0;
    ln.b = 1;
    ln.c = C / B;
  }
  return ln;
}

Line Line::through(const Point& p, const Point& q) {
  if (p == q) throw DegenerateInput("line through coincident points");
  Scalar A = q.y - p.y;
  Scalar B = p.x - q.x;
  Scalar C = -(A * p.x + B * p.y);
  return from_coefficients(std::move(A), std::move(B), std::move(C));
}

std::optional<Point> line_intersection(const Line& l1, const Line& l2) {
  Scalar det = l1.a * l2.b - l2.a * l1.b;
  if (det == 0) return std::nullopt;
  Scalar x = (l1.b * l2.c - l2.b * l1.c) / det;
  Scalar y = (l2.a * l1.c - l1.a * l2.c) / det;
  return Point{std::move(x), std::move(y)};
}

HalfLine HalfLine::make(Point origin, Scalar dx, Scalar dy) {
  if (dx == 0 && dy == 0) throw DegenerateInput("half-line with zero direction");
  return HalfLine{std::move(origin), std::move(dx), std::move(dy)};
}

HalfLine HalfLine::from_towards(const Point& origin, const Point& towards) {
  return make(origin, towards.x - origin.x, towards.y - origin.y);
}

namespace {

// drop exact consecutive repeats and collinear middle vertices (cyclically)
std::vector<Point> clean_ring(std::vector<Point> ring) {
  std::vector<Point> out;
  for (auto& p : ring) {
    if (out.empty() || !(out.back() == p)) out.push_back(std::move(p));
  }
  while (out.size() > 1 && out.front() == out.back()) out.pop_back();

  bool changed = true;
  while (changed && out.size() >= 3) {
    changed = false;
    std::vector<Point> next;
    size_t n = out.size();
    for (size_t i = 0; i < n; ++i) {
      const Point& prev = out[(i + n - 1) % n];
      const Point& cur = out[i];
      const Point& nxt = out[(i + 1) % n];
      if (orientation(prev, cur, nxt) == Orientation::Collinear) {
        changed = true;
        continue;
      }
      next.push_back(cur);
    }
    out = std::move(next);
  }
  return out;
}

void rotate_to_smallest(std::vector<Point>& ring) {
  auto it = std::min_element(ring.begin(), ring.end());
  std::rotate(ring.begin(), it, ring.end());
}

}  // namespace

Scalar ring_signed_area(const std::vector<Point>& ring) {
  Scalar twice(0);
  size_t n = ring.size();
  for (size_t i = 0; i < n; ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % n];
    twice += a.x * b.y - b.x * a.y;
  }
  return twice / 2;
}

Location locate_in_ring(const std::vector<Point>& ring, const Point& p) {
  size_t n = ring.size();
  for (size_t i = 0; i < n; ++i) {
    if (on_segment(p, ring[i], ring[(i + 1) % n])) return Location::Boundary;
  }
  // crossing number against the horizontal ray to +infinity, half-open in y
  int crossings = 0;
  for (size_t i = 0; i < n; ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % n];
    bool a_above = a.y > p.y;
    bool b_above = b.y > p.y;
    if (a_above == b_above) continue;
    // x coordinate where the edge meets the ray's line
    Scalar xi = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
    if (xi > p.x) ++crossings;
  }
  return (crossings % 2 == 1) ? Location::Inside : Location::Outside;
}

std::optional<ConvexRegion> ConvexRegion::make(std::vector<Point> ring) {
  std::vector<Point> cleaned = clean_ring(std::move(ring));
  if (cleaned.size() < 3) return std::nullopt;
  size_t n = cleaned.size();
  for (size_t i = 0; i < n; ++i) {
    if (orientation(cleaned[i], cleaned[(i + 1) % n], cleaned[(i + 2) % n]) != Orientation::CCW)
      return std::nullopt;
  }
  rotate_to_smallest(cleaned);
  ConvexRegion r;
  r.verts_ = std::move(cleaned);
  return r;
}

Scalar ConvexRegion::area() const { return ring_signed_area(verts_); }

Point ConvexRegion::centroid() const {
  Scalar sx(0), sy(0);
  for (const auto& v : verts_) {
    sx += v.x;
    sy += v.y;
  }
  Scalar n(static_cast<unsigned long>(verts_.size()));
  return {sx / n, sy / n};
}

Location ConvexRegion::locate(const Point& p) const {
  size_t n = verts_.size();
  bool boundary = false;
  for (size_t i = 0; i < n; ++i) {
    int s = sign_of(cross(verts_[i], verts_[(i + 1) % n], p));
    if (s < 0) return Location::Outside;
    if (s == 0) boundary = true;
  }
  return boundary ? Location::Boundary : Location::Inside;
}

std::optional<ConvexRegion> ConvexRegion::clip_halfplane(const Line& boundary, KeepSide keep) const {
  int keep_sign = keep == KeepSide::Left ? 1 : -1;
  std::vector<Point> out;
  size_t n = verts_.size();
  for (size_t i = 0; i < n; ++i) {
    const Point& cur = verts_[i];
    const Point& nxt = verts_[(i + 1) % n];
    int sc = boundary.side(cur) * keep_sign;
    int sn = boundary.side(nxt) * keep_sign;
    if (sc >= 0) out.push_back(cur);
    if ((sc > 0 && sn < 0) || (sc < 0 && sn > 0)) {
      auto hit = line_intersection(boundary, Line::through(cur, nxt));
      out.push_back(*hit);  // sides differ strictly, so the lines cannot be parallel
    }
  }
  return ConvexRegion::make(std::move(out));
}

std::pair<std::optional<ConvexRegion>, std::optional<ConvexRegion>> ConvexRegion::split_by_line(
    const Line& ln) const {
  return {clip_halfplane(ln, KeepSide::Right), clip_halfplane(ln, KeepSide::Left)};
}

std::vector<Line> ConvexRegion::edge_lines() const {
  std::vector<Line> out;
  size_t n = verts_.size();
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) out.push_back(Line::through(verts_[i], verts_[(i + 1) % n]));
  return out;
}

std::vector<Segment> ConvexRegion::edges() const {
  std::vector<Segment> out;
  size_t n = verts_.size();
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) out.push_back(Segment{verts_[i], verts_[(i + 1) % n]});
  return out;
}

void ConvexRegion::bounding_box(Point& lo, Point& hi) const {
  lo = hi = verts_.front();
  for (const auto& v : verts_) {
    if (v.x < lo.x) lo.x = v.x;
    if (v.y < lo.y) lo.y = v.y;
    if (v.x > hi.x) hi.x = v.x;
    if (v.y > hi.y) hi.y = v.y;
  }
}

std::optional<ConvexRegion> clip_convex_by_halfplane(const ConvexRegion& region, const Line& boundary,
                                                     KeepSide keep_side) {
  return region.clip_halfplane(boundary, keep_side);
}

SimplePolygon SimplePolygon::make(std::vector<Point> ring) {
  // drop exact consecutive repeats only; collinear vertices are legal here
  std::vector<Point> v;
  for (auto& p : ring) {
    if (v.empty() || !(v.back() == p)) v.push_back(std::move(p));
  }
  while (v.size() > 1 && v.front() == v.back()) v.pop_back();
  if (v.size() < 3) throw TooFewVertices("polygon needs at least 3 distinct vertices");

  size_t n = v.size();
  for (size_t i = 0; i < n; ++i) {
    const Point &a1 = v[i], &b1 = v[(i + 1) % n];
    if (a1 == b1) throw DegenerateInput("zero-length edge");
    for (size_t j = i + 1; j < n; ++j) {
      const Point &a2 = v[j], &b2 = v[(j + 1) % n];
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) {
        // neighbours share one endpoint; a collinear fold-back is a spike
        const Point& shared = (j == i + 1) ? b1 : a1;
        const Point& far1 = (j == i + 1) ? a1 : b1;
        const Point& far2 = (j == i + 1) ? b2 : a2;
        if (orientation(far1, shared, far2) == Orientation::Collinear &&
            (on_segment(far2, far1, shared) || on_segment(far1, far2, shared)))
          throw NotSimple("adjacent edges fold back");
        continue;
      }
      if (segments_properly_cross(a1, b1, a2, b2)) throw NotSimple("edges cross");
      if (on_segment(a2, a1, b1) || on_segment(b2, a1, b1) || on_segment(a1, a2, b2) ||
          on_segment(b1, a2, b2))
        throw NotSimple("edge touches a non-adjacent edge");
    }
  }

  Scalar area2 = ring_signed_area(v);
  if (area2 == 0) throw DegenerateInput("polygon with zero area");
  if (area2 < 0) std::reverse(v.begin(), v.end());

  SimplePolygon p;
  p.verts_ = std::move(v);
  return p;
}

SimplePolygon SimplePolygon::unchecked(std::vector<Point> ring) {
  std::vector<Point> v;
  for (auto& p : ring) {
    if (v.empty() || !(v.back() == p)) v.push_back(std::move(p));
  }
  while (v.size() > 1 && v.front() == v.back()) v.pop_back();
  SimplePolygon p;
  p.verts_ = std::move(v);
  return p;
}

Scalar SimplePolygon::area() const { return ring_signed_area(verts_); }

Location SimplePolygon::locate(const Point& p) const { return locate_in_ring(verts_, p); }

std::vector<Segment> SimplePolygon::edges() const {
  std::vector<Segment> out;
  size_t n = verts_.size();
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) out.push_back(Segment{verts_[i], verts_[(i + 1) % n]});
  return out;
}

std::vector<Line> SimplePolygon::edge_lines() const {
  std::vector<Line> out;
  size_t n = verts_.size();
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) out.push_back(Line::through(verts_[i], verts_[(i + 1) % n]));
  return out;
}

std::vector<size_t> SimplePolygon::reflex_vertices() const {
  std::vector<size_t> out;
  size_t n = verts_.size();
  for (size_t i = 0; i < n; ++i) {
    if (orientation(verts_[(i + n - 1) % n], verts_[i], verts_[(i + 1) % n]) == Orientation::CW)
      out.push_back(i);
  }
  return out;
}

void SimplePolygon::bounding_box(Point& lo, Point& hi) const {
  lo = hi = verts_.front();
  for (const auto& v : verts_) {
    if (v.x < lo.x) lo.x = v.x;
    if (v.y < lo.y) lo.y = v.y;
    if (v.x > hi.x) hi.x = v.x;
    if (v.y > hi.y) hi.y = v.y;
  }
}

bool convex_inside_ring(const ConvexRegion& region, const std::vector<Point>& ring) {
  for (const auto& v : region.vertices()) {
    if (locate_in_ring(ring, v) == Location::Outside) return false;
  }
  if (locate_in_ring(ring, region.centroid()) == Location::Outside) return false;
  // no ring edge may run through the region's interior
  size_t n = ring.size();
  for (size_t i = 0; i < n; ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % n];
    if (a == b) continue;
    // clip the edge segment to the region; a positive-length piece whose
    // midpoint is strictly interior means the boundary invades the region
    Scalar t0(0), t1(1);
    bool empty = false;
    const auto& rv = region.vertices();
    size_t m = rv.size();
    for (size_t j = 0; j < m && !empty; ++j) {
      // keep cross(rv[j], rv[j+1], point(t)) >= 0, affine in t
      Scalar f0 = cross(rv[j], rv[(j + 1) % m], a);
      Scalar f1 = cross(rv[j], rv[(j + 1) % m], b);
      Scalar d = f1 - f0;
      if (d == 0) {
        if (f0 < 0) empty = true;
        continue;
      }
      Scalar tc = -f0 / d;
      if (d > 0) {
        if (tc > t0) t0 = tc;
      } else {
        if (tc < t1) t1 = tc;
      }
      if (t0 >= t1) empty = true;
    }
    if (empty) continue;
    Scalar tm = (t0 + t1) / 2;
    Point mid{a.x + tm * (b.x - a.x), a.y + tm * (b.y - a.y)};
    if (region.locate(mid) == Location::Inside) return false;
  }
  return true;
}

}  // namespace gridguard
