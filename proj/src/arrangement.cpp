#include "gridguard/arrangement.hpp"

#include <algorithm>

namespace gridguard {

std::vector<Line> dedup_lines(std::vector<Line> lines) {
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  return lines;
}

std::vector<ConvexRegion> split_convex_by_lines(const ConvexRegion& seed, const std::vector<Line>& lines,
                                                size_t max_cells) {
  std::vector<ConvexRegion> cells{seed};
  std::vector<ConvexRegion> next;
  for (const Line& ln : lines) {
    next.clear();
    next.reserve(cells.size() + 16);
    for (ConvexRegion& cell : cells) {
      bool neg = false, pos = false;
      for (const Point& v : cell.vertices()) {
        int s = ln.side(v);
        if (s < 0) neg = true;
        else if (s > 0) pos = true;
        if (neg && pos) break;
      }
      if (neg && pos) {
        auto [lo, hi] = cell.split_by_line(ln);
        if (lo) next.push_back(std::move(*lo));
        if (hi) next.push_back(std::move(*hi));
      } else {
        next.push_back(std::move(cell));
      }
    }
    cells.swap(next);
    if (cells.size() > max_cells)
      throw CellBudgetExceeded("cell count " + std::to_string(cells.size()) + " exceeds budget " +
                               std::to_string(max_cells));
  }
  return cells;
}

std::vector<ConvexRegion> arrangement_faces(const std::vector<Line>& lines, const SimplePolygon& clip,
                                            size_t max_cells) {
  std::vector<Line> sorted = dedup_lines(lines);
  for (const Line& edge_line : clip.edge_lines()) {
    if (!std::binary_search(sorted.begin(), sorted.end(), edge_line))
      throw PreconditionViolated("clip edge line missing from the arrangement line set");
  }

  Point lo, hi;
  clip.bounding_box(lo, hi);
  auto seed = ConvexRegion::make({{lo.x, lo.y}, {hi.x, lo.y}, {hi.x, hi.y}, {lo.x, hi.y}});
  if (!seed) throw DegenerateInput("clip polygon has an empty bounding box");

  std::vector<ConvexRegion> cells = split_convex_by_lines(*seed, sorted, max_cells);

  std::vector<ConvexRegion> faces;
  for (auto& cell : cells) {
    if (clip.locate(cell.centroid()) == Location::Inside) faces.push_back(std::move(cell));
  }
  std::sort(faces.begin(), faces.end(),
            [](const ConvexRegion& a, const ConvexRegion& b) { return a.vertices() < b.vertices(); });
  return faces;
}

}  // namespace gridguard
