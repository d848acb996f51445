#include "gridguard/visibility.hpp"

#include <algorithm>

namespace gridguard {

namespace {

Point point_at(const Point& p, const Point& q, const Scalar& t) {
  return {p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)};
}

// parameter of a point r known to lie on line(p, q)
Scalar param_on_line(const Point& p, const Point& q, const Point& r) {
  Scalar dx = q.x - p.x, dy = q.y - p.y;
  return ((r.x - p.x) * dx + (r.y - p.y) * dy) / (dx * dx + dy * dy);
}

// all parameters t in [0,1] where segment p+t(q-p) touches the boundary of P
void boundary_contact_params(const SimplePolygon& P, const Point& p, const Point& q,
                             std::vector<Scalar>& ts) {
  auto add = [&](Scalar t) {
    if (t >= 0 && t <= 1) ts.push_back(std::move(t));
  };
  size_t n = P.size();
  for (size_t i = 0; i < n; ++i) {
    const Point& a = P.vertex(i);
    const Point& b = P.vertex(i + 1);
    Scalar fa = cross(p, q, a);
    Scalar fb = cross(p, q, b);
    int sa = sign_of(fa), sb = sign_of(fb);
    if (sa == 0 && sb == 0) {
      add(param_on_line(p, q, a));
      add(param_on_line(p, q, b));
    } else if (sa == 0) {
      add(param_on_line(p, q, a));
    } else if (sb == 0) {
      add(param_on_line(p, q, b));
    } else if (sa != sb) {
      Scalar ga = cross(a, b, p);
      Scalar gb = cross(a, b, q);
      if (ga != gb) add(ga / (ga - gb));
    }
  }
}

// shared core: the open segment stays within closed P
bool segment_stays_inside(const SimplePolygon& P, const Point& p, const Point& q) {
  std::vector<Scalar> ts{Scalar(0), Scalar(1)};
  boundary_contact_params(P, p, q, ts);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  for (size_t i = 0; i + 1 < ts.size(); ++i) {
    Scalar tm = (ts[i] + ts[i + 1]) / 2;
    if (P.locate(point_at(p, q, tm)) == Location::Outside) return false;
  }
  return true;
}

}  // namespace

bool sees(const SimplePolygon& P, const Point& p, const Point& q) {
  if (P.locate(p) == Location::Outside) throw InputOutsidePolygon("sees: first point outside polygon");
  if (P.locate(q) == Location::Outside) throw InputOutsidePolygon("sees: second point outside polygon");
  if (p == q) return true;

  // pinch rule: a vertex strictly inside the segment blocks unless one of
  // its edges runs along the sightline
  size_t n = P.size();
  for (size_t i = 0; i < n; ++i) {
    const Point& v = P.vertex(i);
    if (v == p || v == q) continue;
    if (!on_segment(v, p, q)) continue;
    bool prev_on = orientation(p, q, P.vertex(i + n - 1)) == Orientation::Collinear;
    bool next_on = orientation(p, q, P.vertex(i + 1)) == Orientation::Collinear;
    if (!prev_on && !next_on) return false;
  }
  return segment_stays_inside(P, p, q);
}

bool segment_in_polygon(const SimplePolygon& P, const Point& a, const Point& b) {
  if (P.locate(a) == Location::Outside || P.locate(b) == Location::Outside) return false;
  if (a == b) return true;
  return segment_stays_inside(P, a, b);
}

VisibilityPolygon visibility_polygon(const SimplePolygon& P, const Point& q) {
  if (P.locate(q) == Location::Outside)
    throw InputOutsidePolygon("visibility_polygon: viewpoint outside polygon");

  size_t n = P.size();
  std::vector<Point> ring;

  for (size_t i = 0; i < n; ++i) {
    const Point& a = P.vertex(i);
    const Point& b = P.vertex(i + 1);

    // breakpoints where visibility along this edge can flip: the sightline
    // sweeps past a vertex, or the edge point crosses another edge's line
    std::vector<Scalar> ts{Scalar(0), Scalar(1)};
    for (size_t j = 0; j < n; ++j) {
      const Point& v = P.vertex(j);
      if (v == q) continue;
      Scalar c0 = (a.x - q.x) * (v.y - q.y) - (a.y - q.y) * (v.x - q.x);
      Scalar c1 = (b.x - a.x) * (v.y - q.y) - (b.y - a.y) * (v.x - q.x);
      if (c1 == 0) continue;
      Scalar t = -c0 / c1;
      if (t > 0 && t < 1) ts.push_back(std::move(t));
    }
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      Line lj = Line::through(P.vertex(j), P.vertex(j + 1));
      Scalar e0 = lj.eval(a);
      Scalar e1 = lj.eval(b);
      if (e0 == e1) continue;
      Scalar t = e0 / (e0 - e1);
      if (t > 0 && t < 1) ts.push_back(std::move(t));
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

    // visible sub-intervals, merged across shared breakpoints
    bool in_run = false;
    Scalar run_start(0);
    for (size_t k = 0; k + 1 < ts.size(); ++k) {
      Scalar tm = (ts[k] + ts[k + 1]) / 2;
      bool vis = sees(P, q, point_at(a, b, tm));
      if (vis && !in_run) {
        in_run = true;
        run_start = ts[k];
      }
      if (!vis && in_run) {
        in_run = false;
        ring.push_back(point_at(a, b, run_start));
        ring.push_back(point_at(a, b, ts[k]));
      }
    }
    if (in_run) {
      ring.push_back(point_at(a, b, run_start));
      ring.push_back(point_at(a, b, Scalar(1)));
    }
  }

  // stitch: drop repeats, then collinear middles; window chords between
  // consecutive visible pieces become edges of the result
  std::vector<Point> cleaned;
  for (auto& p : ring) {
    if (cleaned.empty() || !(cleaned.back() == p)) cleaned.push_back(std::move(p));
  }
  while (cleaned.size() > 1 && cleaned.front() == cleaned.back()) cleaned.pop_back();
  bool changed = true;
  while (changed && cleaned.size() >= 3) {
    changed = false;
    std::vector<Point> next;
    size_t m = cleaned.size();
    for (size_t k = 0; k < m; ++k) {
      if (orientation(cleaned[(k + m - 1) % m], cleaned[k], cleaned[(k + 1) % m]) ==
          Orientation::Collinear) {
        changed = true;
        continue;
      }
      next.push_back(cleaned[k]);
    }
    cleaned = std::move(next);
  }
  if (cleaned.size() < 3)
    throw InputOutsidePolygon("visibility region degenerated; viewpoint sees no area");

  return VisibilityPolygon{SimplePolygon::unchecked(std::move(cleaned)), q};
}

bool CompleteVisibilityRegion::contains_region(const ConvexRegion& r) const {
  return convex_inside_ring(r, from_a.region.vertices()) &&
         convex_inside_ring(r, from_b.region.vertices());
}

std::vector<ConvexRegion> CompleteVisibilityRegion::decompose(size_t max_cells) const {
  std::vector<Line> lines = from_a.region.edge_lines();
  for (auto& l : from_b.region.edge_lines()) lines.push_back(l);
  lines = dedup_lines(std::move(lines));

  Point lo, hi, lo2, hi2;
  from_a.region.bounding_box(lo, hi);
  from_b.region.bounding_box(lo2, hi2);
  lo.x = std::min(lo.x, lo2.x);
  lo.y = std::min(lo.y, lo2.y);
  hi.x = std::max(hi.x, hi2.x);
  hi.y = std::max(hi.y, hi2.y);
  auto seed = ConvexRegion::make({{lo.x, lo.y}, {hi.x, lo.y}, {hi.x, hi.y}, {lo.x, hi.y}});
  if (!seed) return {};

  std::vector<ConvexRegion> out;
  for (auto& cell : split_convex_by_lines(*seed, lines, max_cells)) {
    Point c = cell.centroid();
    if (locate_in_ring(from_a.region.vertices(), c) == Location::Inside &&
        locate_in_ring(from_b.region.vertices(), c) == Location::Inside)
      out.push_back(std::move(cell));
  }
  std::sort(out.begin(), out.end(),
            [](const ConvexRegion& a, const ConvexRegion& b) { return a.vertices() < b.vertices(); });
  return out;
}

CompleteVisibilityRegion complete_visibility_polygon(const SimplePolygon& P, const Segment& s) {
  if (!segment_in_polygon(P, s.a, s.b))
    throw SegmentOutsidePolygon("complete_visibility_polygon: segment leaves the polygon");
  VisibilityPolygon va = visibility_polygon(P, s.a);
  VisibilityPolygon vb = visibility_polygon(P, s.b);
  return CompleteVisibilityRegion{s, std::move(va), std::move(vb)};
}

}  // namespace gridguard
