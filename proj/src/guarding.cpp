#include "gridguard/guarding.hpp"

#include "gridguard/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace gridguard {

const CompleteVisibilityRegion& CvpCache::get(const Segment& edge) {
  std::pair<Point, Point> key = edge.a < edge.b ? std::make_pair(edge.a, edge.b)
                                                : std::make_pair(edge.b, edge.a);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  CompleteVisibilityRegion fresh =
      complete_visibility_polygon(*polygon_, Segment::make(key.first, key.second));
  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, inserted] = cache_.try_emplace(key, std::move(fresh));
  (void)inserted;
  return it->second;
}

namespace {

TempSubRegion self_tsr(const ScRegion& source) {
  Segment e0 = source.cell.edges().front();
  TempSubRegion t;
  t.source_id = source.id;
  t.target_id = source.id;
  t.via_edge = e0;
  t.region = source.cell;
  t.shl = HalfLine::from_towards(e0.a, e0.b);
  t.ehl = HalfLine::from_towards(e0.b, e0.a);
  t.full_cell = true;
  return t;
}

// tangency vertex of the wedge constraint anchored at window endpoint e:
// the target vertex whose anchored line supports all the others on the
// kept side; collinear ties resolve to the farthest vertex.
Point tangency_vertex(const Point& e, const std::vector<Point>& target, int kept_orient) {
  Point best;
  bool have = false;
  for (const Point& v : target) {
    if (v == e) continue;
    if (!have) {
      best = v;
      have = true;
      continue;
    }
    Scalar c = cross(e, best, v);
    int s = sign_of(c);
    if (s != 0 && s != kept_orient) {
      best = v;
    } else if (s == 0) {
      Scalar db = (best.x - e.x) * (best.x - e.x) + (best.y - e.y) * (best.y - e.y);
      Scalar dv = (v.x - e.x) * (v.x - e.x) + (v.y - e.y) * (v.y - e.y);
      if (dv > db) best = v;
    }
  }
  return best;
}

}  // namespace

std::optional<TempSubRegion> findtsr(const SimplePolygon& P, const Segment& via_edge,
                                     const ScRegion& source, const ScRegion& target,
                                     const CompleteVisibilityRegion& edge_cvp) {
  bool edge_found = false;
  for (const Segment& e : source.cell.edges()) {
    if (e.same_unordered(via_edge)) {
      edge_found = true;
      break;
    }
  }
  if (!edge_found) throw EdgeNotOnSource("findtsr: via_edge is not an edge of the source cell");

  if (target.id == source.id) return self_tsr(source);

  if (!edge_cvp.contains_region(target.cell)) return std::nullopt;

  const Point& a = via_edge.a;
  const Point& b = via_edge.b;
  const Point inside_ref = source.cell.centroid();

  TempSubRegion out;
  out.source_id = source.id;
  out.target_id = target.id;
  out.via_edge = via_edge;

  ConvexRegion region = source.cell;

  // Wedge: a sightline from the source to a target vertex across the window
  // line must cross it within the window segment. At endpoint e (far
  // endpoint o) that reads: the vertex must lie on o's side of line(x, e),
  // i.e. x stays on one fixed side of line(e, v). Vertices on the source's
  // side of the window line are not seen through this window and impose no
  // wedge constraint; the certificate below covers them.
  const Line window = Line::through(a, b);
  const int source_side = window.side(inside_ref);
  struct Anchor {
    const Point* e;
    const Point* o;
  };
  for (Anchor anchor : {Anchor{&a, &b}, Anchor{&b, &a}}) {
    int s = sign_of(cross(inside_ref, *anchor.e, *anchor.o));
    if (s == 0) throw PreconditionViolated("degenerate window: source centroid on the edge line");
    for (const Point& v : target.cell.vertices()) {
      if (v == *anchor.e) continue;
      if (window.side(v) * source_side >= 0) continue;
      Line cut = Line::through(*anchor.e, v);
      // probe one step counter-clockwise of ray e->v to pin eval's sign
      Point probe{anchor.e->x - (v.y - anchor.e->y), anchor.e->y + (v.x - anchor.e->x)};
      int keep_sign = s * sign_of(cut.eval(probe));
      KeepSide keep = keep_sign > 0 ? KeepSide::Left : KeepSide::Right;
      auto clipped = region.clip_halfplane(cut, keep);
      if (!clipped) return std::nullopt;
      if (!(*clipped == region)) {
        region = std::move(*clipped);
        out.cuts.push_back({cut, keep});
      }
    }
  }

  // Soundness certificate: every corner of the candidate must see every
  // target vertex; then (holeless polygon, both regions convex) every point
  // of the candidate sees every point of the target. Corners blocked by a
  // reflex shadow are cut away along the shadow line through the offending
  // target vertex; the window endpoints always stay.
  const std::vector<size_t> reflex = P.reflex_vertices();
  std::set<Line> applied;
  for (const auto& c : out.cuts) applied.insert(c.line);

  const size_t round_limit = (target.cell.size() * reflex.size() + 2) * 2;
  for (size_t round = 0;; ++round) {
    if (round >= round_limit) return std::nullopt;

    bool any_fail = false;
    bool cut_done = false;
    for (const Point& c : region.vertices()) {
      for (const Point& v : target.cell.vertices()) {
        if (sees(P, c, v)) continue;
        any_fail = true;
        for (size_t ri : reflex) {
          const Point& rf = P.vertex(ri);
          if (rf == v) continue;
          Line shadow = Line::through(v, rf);
          if (applied.count(shadow)) continue;
          int side_c = shadow.side(c);
          if (side_c == 0) continue;
          if (shadow.side(a) * side_c > 0 || shadow.side(b) * side_c > 0) continue;
          KeepSide keep = side_c > 0 ? KeepSide::Right : KeepSide::Left;
          applied.insert(shadow);
          auto clipped = region.clip_halfplane(shadow, keep);
          if (!clipped) return std::nullopt;
          if (*clipped == region) continue;
          out.cuts.push_back({shadow, keep});
          region = std::move(*clipped);
          cut_done = true;
          break;
        }
        if (cut_done) break;
      }
      if (cut_done) break;
    }
    if (!any_fail) break;               // certified
    if (!cut_done) return std::nullopt; // no sound region to certify
  }

  out.full_cell = region == source.cell;
  if (out.full_cell) out.cuts.clear();
  out.region = std::move(region);

  int sa = sign_of(cross(inside_ref, a, b));
  Point ta = tangency_vertex(a, target.cell.vertices(), sa);
  Point tb = tangency_vertex(b, target.cell.vertices(), -sa);
  out.shl = HalfLine::make(a, a.x - ta.x, a.y - ta.y);
  out.ehl = HalfLine::make(b, b.x - tb.x, b.y - tb.y);
  return out;
}

std::vector<TempSubRegion> temp_sub_regions_for_cell(const SimplePolygon& P, const ScRegion& source,
                                                     const std::vector<ScRegion>& all_cells,
                                                     CvpCache& cvps) {
  std::vector<TempSubRegion> out;
  out.push_back(self_tsr(source));
  for (const Segment& edge : source.cell.edges()) {
    const CompleteVisibilityRegion& cvp = cvps.get(edge);
    for (const ScRegion& target : all_cells) {
      if (target.id == source.id) continue;
      if (auto tsr = findtsr(P, edge, source, target, cvp)) out.push_back(std::move(*tsr));
    }
  }
  return out;
}

std::vector<GuardingRegion> decompose_scr(const ScRegion& source,
                                          const std::vector<TempSubRegion>& tsrs) {
  for (const auto& t : tsrs) {
    if (t.source_id != source.id)
      throw TsrSourceMismatch("decompose_scr: tsr belongs to another cell");
  }

  std::vector<int> base{source.id};

  struct Face {
    ConvexRegion region;
    std::vector<int> tags;
  };
  std::vector<Face> faces;
  faces.push_back(Face{source.cell, {}});

  for (const auto& tsr : tsrs) {
    if (tsr.target_id == source.id) continue;
    if (tsr.full_cell) {
      base.push_back(tsr.target_id);
      continue;
    }
    for (const auto& cut : tsr.cuts) {
      std::vector<Face> next;
      next.reserve(faces.size() + 4);
      for (Face& f : faces) {
        bool neg = false, pos = false;
        for (const Point& v : f.region.vertices()) {
          int s = cut.line.side(v);
          if (s < 0) neg = true;
          else if (s > 0) pos = true;
          if (neg && pos) break;
        }
        if (neg && pos) {
          auto [lo, hi] = f.region.split_by_line(cut.line);
          if (lo) next.push_back(Face{std::move(*lo), f.tags});
          if (hi) next.push_back(Face{std::move(*hi), std::move(f.tags)});
        } else {
          next.push_back(std::move(f));
        }
      }
      faces.swap(next);
    }
    for (Face& f : faces) {
      Point c = f.region.centroid();
      bool inside = true;
      for (const auto& cut : tsr.cuts) {
        int keep_sign = cut.keep == KeepSide::Left ? 1 : -1;
        if (cut.line.side(c) * keep_sign < 0) {
          inside = false;
          break;
        }
      }
      if (inside) f.tags.push_back(tsr.target_id);
    }
  }

  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());

  std::sort(faces.begin(), faces.end(),
            [](const Face& x, const Face& y) { return x.region.vertices() < y.region.vertices(); });

  std::map<std::vector<int>, std::shared_ptr<const std::vector<int>>> interned;
  std::vector<GuardingRegion> out;
  out.reserve(faces.size());
  for (Face& f : faces) {
    std::vector<int> vl = base;
    std::sort(f.tags.begin(), f.tags.end());
    f.tags.erase(std::unique(f.tags.begin(), f.tags.end()), f.tags.end());
    vl.insert(vl.end(), f.tags.begin(), f.tags.end());
    std::sort(vl.begin(), vl.end());
    vl.erase(std::unique(vl.begin(), vl.end()), vl.end());

    auto it = interned.find(vl);
    if (it == interned.end())
      it = interned.emplace(vl, std::make_shared<const std::vector<int>>(vl)).first;

    GuardingRegion gr;
    gr.id = static_cast<int>(out.size());
    gr.source_id = source.id;
    gr.region = std::move(f.region);
    gr.visible_list = it->second;
    out.push_back(std::move(gr));
  }
  return out;
}

std::vector<GuardingRegion> build_all_guarding_regions(const SimplePolygon& P,
                                                       const std::vector<ScRegion>& cells,
                                                       GuardingStats* stats) {
  using clock = std::chrono::steady_clock;
  auto ms_between = [](clock::time_point a, clock::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
  };

  CvpCache cvps(P);
  std::vector<std::vector<TempSubRegion>> tsrs(cells.size());
  auto t0 = clock::now();
  parallel_for(cells.size(),
               [&](size_t i) { tsrs[i] = temp_sub_regions_for_cell(P, cells[i], cells, cvps); });
  auto t1 = clock::now();

  std::vector<std::vector<GuardingRegion>> per_cell(cells.size());
  parallel_for(cells.size(), [&](size_t i) { per_cell[i] = decompose_scr(cells[i], tsrs[i]); });
  auto t2 = clock::now();

  std::vector<GuardingRegion> out;
  size_t tsr_count = 0;
  for (const auto& ts : tsrs) tsr_count += ts.size();
  for (auto& grs : per_cell) {
    for (auto& gr : grs) {
      gr.id = static_cast<int>(out.size());
      out.push_back(std::move(gr));
    }
  }
  if (stats) {
    stats->tsr_count = tsr_count;
    stats->tsr_ms = ms_between(t0, t1);
    stats->decompose_ms = ms_between(t1, t2);
  }
  return out;
}

}  // namespace gridguard
