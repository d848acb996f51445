#include "gridguard/decomposition.hpp"

#include "gridguard/oracle.hpp"
#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace gridguard;
using namespace gridguard::testing;

namespace {

// independent dedup oracle: canonicalize by integer cross products
size_t pairwise_line_count(const SimplePolygon& P) {
  std::set<std::vector<Scalar>> canon;
  const auto& v = P.vertices();
  for (size_t i = 0; i < v.size(); ++i) {
    for (size_t j = i + 1; j < v.size(); ++j) {
      Scalar A = v[j].y - v[i].y;
      Scalar B = v[i].x - v[j].x;
      Scalar C = -(A * v[i].x + B * v[i].y);
      Scalar scale = A != 0 ? A : B;
      canon.insert({A / scale, B / scale, C / scale});
    }
  }
  return canon.size();
}

Scalar total_area(const std::vector<ScRegion>& cells) {
  Scalar s(0);
  for (const auto& c : cells) s += c.cell.area();
  return s;
}

}  // namespace

TEST_CASE("vertex lines") {
  CHECK(vertex_lines(unit_square()).size() == 6);
  SimplePolygon tri = SimplePolygon::make({pt(0, 0), pt(2, 0), pt(0, 2)});
  CHECK(vertex_lines(tri).size() == 3);
  SimplePolygon l = lshape();
  auto lines = vertex_lines(l);
  CHECK(lines.size() <= 15);
  CHECK(lines.size() == pairwise_line_count(l));  // 13: one collinear triple collapses two pairs
  CHECK(lines.size() == 13);
}

TEST_CASE("refine_once is monotone and splits triangles at medians") {
  SimplePolygon l = lshape();
  auto lines = vertex_lines(l);
  auto refined = refine_once(lines, l, false);
  std::set<Line> refined_set(refined.begin(), refined.end());
  for (const auto& ln : lines) CHECK(refined_set.count(ln) == 1);
  CHECK(refined.size() >= lines.size());

  // a single triangle with the midpoint rule gains its three medians,
  // which split it into six sub-triangles at the centroid
  SimplePolygon tri = SimplePolygon::make({pt(0, 0), pt(2, 0), pt(0, 2)});
  auto tri_refined = refine_once(vertex_lines(tri), tri, true);
  CHECK(tri_refined.size() == 6);
  auto faces = arrangement_faces(tri_refined, tri);
  CHECK(faces.size() == 6);
  for (const auto& f : faces) CHECK(f.contains(pt(2, 3, 2, 3)));
}

TEST_CASE("refinement respects the cell budget") {
  SimplePolygon l = lshape();
  CHECK_THROWS_AS(refine_once(vertex_lines(l), l, false, 100), CellBudgetExceeded);
}

TEST_CASE("paper strategy on the unit square yields the four diagonal triangles") {
  DecompositionConfig cfg;
  cfg.strategy = Strategy::Paper1;
  auto cells = build_sc_regions(unit_square(), cfg);
  REQUIRE(cells.size() == 4);
  for (const auto& c : cells) {
    CHECK(c.cell.size() == 3);
    CHECK(c.cell.area() == Scalar(1, 4));
    CHECK(c.cell.locate(c.representative) == Location::Inside);
  }
  CHECK(total_area(cells) == Scalar(1));
}

TEST_CASE("convex pentagon at k=0 decomposes into 11 cells") {
  SimplePolygon pent = load("pentagon.poly");
  DecompositionConfig cfg;
  cfg.strategy = Strategy::Paper1;
  auto cells = build_sc_regions(pent, cfg);
  CHECK(cells.size() == 11);

  auto [faces, area] = oracle::oracle_arrangement_count(vertex_lines(pent), pent);
  CHECK(cells.size() == faces);
  CHECK(total_area(cells) == area);
}

TEST_CASE("trapezoid strategy separates the L-shape arms along the reflex extensions") {
  SimplePolygon l = lshape();
  DecompositionConfig cfg;
  cfg.strategy = Strategy::Trapezoid;
  auto cells = build_sc_regions(l, cfg);
  REQUIRE(cells.size() == 3);
  CHECK(total_area(cells) == Scalar(3));

  std::set<std::vector<Point>> rings;
  for (const auto& c : cells) rings.insert(c.cell.vertices());
  auto expect = [&](std::vector<Point> ring) {
    auto r = ConvexRegion::make(std::move(ring));
    REQUIRE(r.has_value());
    CHECK(rings.count(r->vertices()) == 1);
  };
  expect({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)});
  expect({pt(1, 0), pt(2, 0), pt(2, 1), pt(1, 1)});
  expect({pt(0, 1), pt(1, 1), pt(1, 2), pt(0, 2)});
}

TEST_CASE("grid strategy cells never straddle the reflex extension lines") {
  SimplePolygon l = lshape();
  DecompositionConfig cfg;
  cfg.strategy = Strategy::Grid;
  cfg.grid_resolution = 4;
  auto cells = build_sc_regions(l, cfg);
  CHECK(total_area(cells) == Scalar(3));
  for (const auto& c : cells) {
    bool left_of_wall = true, right_of_wall = true;
    bool below_ledge = true, above_ledge = true;
    for (const auto& v : c.cell.vertices()) {
      if (v.x > 1) left_of_wall = false;
      if (v.x < 1) right_of_wall = false;
      if (v.y > 1) below_ledge = false;
      if (v.y < 1) above_ledge = false;
    }
    CHECK((left_of_wall || right_of_wall));
    CHECK((below_ledge || above_ledge));
  }
}

TEST_CASE("every strategy partitions the polygon exactly") {
  SimplePolygon l = lshape();
  for (Strategy s : {Strategy::Paper1, Strategy::Paper2, Strategy::Trapezoid, Strategy::Grid}) {
    DecompositionConfig cfg;
    cfg.strategy = s;
    cfg.k = (s == Strategy::Paper1 || s == Strategy::Paper2) ? 1 : 0;
    cfg.grid_resolution = 5;
    auto cells = build_sc_regions(l, cfg);
    CHECK(total_area(cells) == Scalar(3));
    for (const auto& c : cells) CHECK(c.cell.locate(c.representative) == Location::Inside);
  }
}

TEST_CASE("refined cells nest inside the coarse cells") {
  SimplePolygon l = lshape();
  DecompositionConfig coarse;
  coarse.strategy = Strategy::Paper1;
  auto k0 = build_sc_regions(l, coarse);

  DecompositionConfig fine = coarse;
  fine.k = 1;
  auto k1 = build_sc_regions(l, fine);
  CHECK(k1.size() > k0.size());

  for (const auto& child : k1) {
    size_t parents = 0;
    for (const auto& parent : k0) {
      if (parent.cell.locate(child.representative) == Location::Inside) ++parents;
    }
    CHECK(parents == 1);
  }
}

TEST_CASE("ids are dense and representatives interior") {
  SimplePolygon star = load("star8.poly");
  DecompositionConfig cfg;
  cfg.strategy = Strategy::Trapezoid;
  auto cells = build_sc_regions(star, cfg);
  for (size_t i = 0; i < cells.size(); ++i) {
    CHECK(cells[i].id == static_cast<int>(i));
    CHECK(cells[i].cell.locate(cells[i].representative) == Location::Inside);
  }
  CHECK(total_area(cells) == star.area());
}

TEST_CASE("k is capped") {
  DecompositionConfig cfg;
  cfg.k = 4;
  CHECK_THROWS_AS(build_sc_regions(unit_square(), cfg), DegenerateInput);
}
