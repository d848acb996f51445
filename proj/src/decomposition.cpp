#include "gridguard/decomposition.hpp"

#include <set>

namespace gridguard {

std::vector<Line> vertex_lines(const SimplePolygon& P) {
  std::set<Line> out;
  const auto& v = P.vertices();
  for (size_t i = 0; i < v.size(); ++i) {
    for (size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] == v[j]) continue;
      out.insert(Line::through(v[i], v[j]));
    }
  }
  return {out.begin(), out.end()};
}

std::vector<Line> refine_once(const std::vector<Line>& lines, const SimplePolygon& P, bool triangle_rule,
                              size_t max_cells) {
  std::vector<ConvexRegion> faces = arrangement_faces(lines, P, max_cells);

  std::set<Point> pts;
  for (const auto& f : faces)
    for (const auto& v : f.vertices()) pts.insert(v);
  for (const auto& v : P.vertices()) pts.insert(v);

  std::set<Line> out(lines.begin(), lines.end());
  for (auto i = pts.begin(); i != pts.end(); ++i) {
    auto j = i;
    for (++j; j != pts.end(); ++j) out.insert(Line::through(*i, *j));
  }

  if (triangle_rule) {
    for (const auto& f : faces) {
      if (f.size() != 3) continue;
      const auto& t = f.vertices();
      for (size_t e = 0; e < 3; ++e) {
        Point mid = midpoint(t[e], t[(e + 1) % 3]);
        const Point& opposite = t[(e + 2) % 3];
        if (mid == opposite) continue;
        out.insert(Line::through(mid, opposite));
      }
    }
  }

  std::vector<Line> result(out.begin(), out.end());
  arrangement_faces(result, P, max_cells);  // projected cell count must fit the budget
  return result;
}

namespace {

std::vector<Line> trapezoid_lines(const SimplePolygon& P) {
  std::set<Line> out;
  for (const auto& l : P.edge_lines()) out.insert(l);
  for (const auto& v : P.vertices()) out.insert(Line::from_coefficients(Scalar(1), Scalar(0), -v.x));
  return {out.begin(), out.end()};
}

std::vector<Line> grid_lines(const SimplePolygon& P, unsigned resolution) {
  // uniform grid over the bounding box plus every vertex-pair line; the
  // latter carries the reflex-vertex edge extensions the grid needs
  std::set<Line> out;
  for (const auto& l : vertex_lines(P)) out.insert(l);
  Point lo, hi;
  P.bounding_box(lo, hi);
  for (unsigned i = 0; i <= resolution; ++i) {
    Scalar t(static_cast<unsigned long>(i));
    Scalar res(static_cast<unsigned long>(resolution));
    Scalar x = lo.x + (hi.x - lo.x) * t / res;
    Scalar y = lo.y + (hi.y - lo.y) * t / res;
    out.insert(Line::from_coefficients(Scalar(1), Scalar(0), -x));
    out.insert(Line::from_coefficients(Scalar(0), Scalar(1), -y));
  }
  return {out.begin(), out.end()};
}

}  // namespace

std::vector<ScRegion> build_sc_regions(const SimplePolygon& P, const DecompositionConfig& cfg) {
  if (cfg.k > 3) throw DegenerateInput("refinement depth k is capped at 3");
  if (cfg.max_cells == 0) throw DegenerateInput("max_cells must be positive");

  std::vector<Line> lines;
  switch (cfg.strategy) {
    case Strategy::Paper1:
    case Strategy::Paper2: {
      lines = vertex_lines(P);
      bool triangle_rule = cfg.strategy == Strategy::Paper2;
      for (unsigned i = 0; i < cfg.k; ++i) lines = refine_once(lines, P, triangle_rule, cfg.max_cells);
      break;
    }
    case Strategy::Trapezoid:
      lines = trapezoid_lines(P);
      break;
    case Strategy::Grid:
      if (cfg.grid_resolution == 0) throw DegenerateInput("grid resolution must be positive");
      lines = grid_lines(P, cfg.grid_resolution);
      break;
  }

  std::vector<ConvexRegion> faces = arrangement_faces(lines, P, cfg.max_cells);
  std::vector<ScRegion> out;
  out.reserve(faces.size());
  for (size_t i = 0; i < faces.size(); ++i) {
    Point rep = faces[i].centroid();
    out.push_back(ScRegion{static_cast<int>(i), std::move(faces[i]), std::move(rep)});
  }
  return out;
}

}  // namespace gridguard
