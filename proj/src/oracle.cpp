#include "gridguard/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace gridguard::oracle {

namespace {

// local point location (crossing number), independent of SimplePolygon::locate
int locate_local(const std::vector<Point>& ring, const Point& p) {
  size_t n = ring.size();
  for (size_t i = 0; i < n; ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % n];
    if (orientation(a, b, p) == Orientation::Collinear) {
      bool in_x = (a.x <= p.x && p.x <= b.x) || (b.x <= p.x && p.x <= a.x);
      bool in_y = (a.y <= p.y && p.y <= b.y) || (b.y <= p.y && p.y <= a.y);
      if (in_x && in_y) return 1;  // boundary
    }
  }
  int crossings = 0;
  for (size_t i = 0; i < n; ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % n];
    if ((a.y > p.y) == (b.y > p.y)) continue;
    Scalar xi = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
    if (xi > p.x) ++crossings;
  }
  return crossings % 2 == 1 ? 2 : 0;  // inside : outside
}

Scalar line_param(const Point& p, const Point& q, const Point& r) {
  Scalar dx = q.x - p.x, dy = q.y - p.y;
  return ((r.x - p.x) * dx + (r.y - p.y) * dy) / (dx * dx + dy * dy);
}

bool strictly_between01(const Scalar& t) { return t > 0 && t < 1; }

}  // namespace

bool oracle_sees(const SimplePolygon& P, const Point& p, const Point& q) {
  const auto& ring = P.vertices();
  if (p == q) return locate_local(ring, p) != 0;
  size_t n = ring.size();

  // single edge scan: proper crossings block immediately; boundary contacts
  // are collected for the interval walk below
  std::vector<Scalar> ts;
  ts.push_back(Scalar(0));
  ts.push_back(Scalar(1));
  for (size_t i = 0; i < n; ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % n];
    Orientation oa = orientation(p, q, a);
    Orientation ob = orientation(p, q, b);
    Orientation op = orientation(a, b, p);
    Orientation oq = orientation(a, b, q);
    if (oa != ob && oa != Orientation::Collinear && ob != Orientation::Collinear &&
        op != oq && op != Orientation::Collinear && oq != Orientation::Collinear)
      return false;  // proper crossing
    if (oa == Orientation::Collinear && ob == Orientation::Collinear) {
      Scalar ta = line_param(p, q, a);
      Scalar tb = line_param(p, q, b);
      if (ta >= 0 && ta <= 1) ts.push_back(ta);
      if (tb >= 0 && tb <= 1) ts.push_back(tb);
    } else if (oa == Orientation::Collinear) {
      Scalar ta = line_param(p, q, a);
      if (ta >= 0 && ta <= 1) ts.push_back(ta);
    } else if (ob == Orientation::Collinear) {
      Scalar tb = line_param(p, q, b);
      if (tb >= 0 && tb <= 1) ts.push_back(tb);
    } else if (oa != ob) {
      // edge straddles the sightline; note where the sightline meets it
      Scalar ga = cross(a, b, p);
      Scalar gb = cross(a, b, q);
      if (ga != gb) {
        Scalar t = ga / (ga - gb);
        if (t >= 0 && t <= 1) ts.push_back(t);
      }
    }
  }

  // vertex pinch blocks unless an incident edge runs along the sightline
  for (size_t i = 0; i < n; ++i) {
    const Point& v = ring[i];
    if (v == p || v == q) continue;
    if (orientation(p, q, v) != Orientation::Collinear) continue;
    Scalar tv = line_param(p, q, v);
    if (!strictly_between01(tv)) continue;
    const Point& prev = ring[(i + n - 1) % n];
    const Point& next = ring[(i + 1) % n];
    if (orientation(p, q, prev) != Orientation::Collinear &&
        orientation(p, q, next) != Orientation::Collinear)
      return false;
  }

  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  for (size_t i = 0; i + 1 < ts.size(); ++i) {
    Scalar tm = (ts[i] + ts[i + 1]) / 2;
    Point m{p.x + tm * (q.x - p.x), p.y + tm * (q.y - p.y)};
    if (locate_local(ring, m) == 0) return false;
  }
  return true;
}

namespace {

constexpr unsigned long kSampleDenominator = 1ul << 31;

SampleSet sample_ring(const std::vector<Point>& ring, size_t count, uint64_t seed,
                      bool convex_strict) {
  Point lo = ring.front(), hi = ring.front();
  for (const auto& v : ring) {
    if (v.x < lo.x) lo.x = v.x;
    if (v.y < lo.y) lo.y = v.y;
    if (v.x > hi.x) hi.x = v.x;
    if (v.y > hi.y) hi.y = v.y;
  }
  std::mt19937_64 rng(seed);
  SampleSet out;
  out.seed = seed;
  out.points.reserve(count);
  size_t guard = 0;
  while (out.points.size() < count) {
    if (++guard > count * 10000 + 100000)
      throw Error(ErrorClass::Internal, "rejection sampling failed to land inside the region");
    Scalar fx(static_cast<unsigned long>(rng() & (kSampleDenominator - 1)), kSampleDenominator);
    Scalar fy(static_cast<unsigned long>(rng() & (kSampleDenominator - 1)), kSampleDenominator);
    fx.canonicalize();
    fy.canonicalize();
    Point cand{lo.x + (hi.x - lo.x) * fx, lo.y + (hi.y - lo.y) * fy};
    bool inside;
    if (convex_strict) {
      inside = true;
      size_t n = ring.size();
      for (size_t i = 0; i < n && inside; ++i)
        if (orientation(ring[i], ring[(i + 1) % n], cand) != Orientation::CCW) inside = false;
    } else {
      inside = locate_local(ring, cand) == 2;
    }
    if (inside) out.points.push_back(std::move(cand));
  }
  return out;
}

}  // namespace

SampleSet sample_polygon(const SimplePolygon& P, size_t count, uint64_t seed) {
  return sample_ring(P.vertices(), count, seed, false);
}

SampleSet sample_convex(const ConvexRegion& region, size_t count, uint64_t seed) {
  return sample_ring(region.vertices(), count, seed, true);
}

std::vector<int> oracle_visible_list(const SimplePolygon& P, const Point& p,
                                     const std::vector<ScRegion>& cells, size_t per_cell_samples,
                                     uint64_t seed) {
  std::vector<int> out;
  for (const auto& cell : cells) {
    const auto& ring = cell.cell.vertices();
    // vertex centroid, computed locally
    Scalar sx(0), sy(0);
    for (const auto& v : ring) {
      sx += v.x;
      sy += v.y;
    }
    Scalar n(static_cast<unsigned long>(ring.size()));
    Point center{sx / n, sy / n};

    bool visible = true;
    for (const auto& v : ring) {
      Point nudged{v.x + (center.x - v.x) / 1024, v.y + (center.y - v.y) / 1024};
      if (!oracle_sees(P, p, nudged)) {
        visible = false;
        break;
      }
    }
    if (visible) {
      SampleSet samples =
          sample_convex(cell.cell, per_cell_samples, seed + static_cast<uint64_t>(cell.id) * 7919);
      for (const auto& s : samples.points) {
        if (!oracle_sees(P, p, s)) {
          visible = false;
          break;
        }
      }
    }
    if (visible) out.push_back(cell.id);
  }
  return out;
}

std::pair<size_t, Scalar> oracle_arrangement_count(const std::vector<Line>& lines,
                                                   const SimplePolygon& clip) {
  // dedup on the canonical coefficient triples
  std::vector<Line> ls = lines;
  std::sort(ls.begin(), ls.end());
  ls.erase(std::unique(ls.begin(), ls.end()), ls.end());

  const auto& ring = clip.vertices();
  std::set<Point> used_vertices;
  size_t edge_count = 0;

  for (size_t i = 0; i < ls.size(); ++i) {
    std::vector<Point> pts;
    for (size_t j = 0; j < ls.size(); ++j) {
      if (i == j) continue;
      // local 2x2 solve
      Scalar det = ls[i].a * ls[j].b - ls[j].a * ls[i].b;
      if (det == 0) continue;
      Point hit{(ls[i].b * ls[j].c - ls[j].b * ls[i].c) / det,
                (ls[j].a * ls[i].c - ls[i].a * ls[j].c) / det};
      if (locate_local(ring, hit) != 0) pts.push_back(std::move(hit));
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (size_t k = 0; k + 1 < pts.size(); ++k) {
      Point mid{(pts[k].x + pts[k + 1].x) / 2, (pts[k].y + pts[k + 1].y) / 2};
      if (locate_local(ring, mid) != 0) {
        ++edge_count;
        used_vertices.insert(pts[k]);
        used_vertices.insert(pts[k + 1]);
      }
    }
  }

  // Euler relation on the connected subdivision: inner faces = E - V + 1
  size_t faces = edge_count + 1 - used_vertices.size();

  Scalar twice(0);
  size_t n = ring.size();
  for (size_t i = 0; i < n; ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % n];
    twice += a.x * b.y - b.x * a.y;
  }
  return {faces, twice / 2};
}

}  // namespace gridguard::oracle
