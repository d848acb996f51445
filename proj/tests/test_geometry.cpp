#include "gridguard/geometry.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace gridguard;
using namespace gridguard::testing;

TEST_CASE("orientation predicate") {
  CHECK(orientation(pt(0, 0), pt(1, 0), pt(0, 1)) == Orientation::CCW);
  CHECK(orientation(pt(0, 0), pt(1, 1), pt(2, 2)) == Orientation::Collinear);
  CHECK(orientation(pt(0, 0), pt(0, 1), pt(1, 1)) == Orientation::CW);
}

TEST_CASE("line intersection") {
  Line x_axis = Line::through(pt(0, 0), pt(1, 0));
  Line y_axis = Line::through(pt(0, 0), pt(0, 1));
  Line y_one = Line::through(pt(0, 1), pt(1, 1));
  Line diag = Line::through(pt(0, 0), pt(1, 1));
  Line anti = Line::through(pt(1, 0), pt(0, 1));

  auto origin = line_intersection(x_axis, y_axis);
  REQUIRE(origin.has_value());
  CHECK(*origin == pt(0, 0));

  CHECK_FALSE(line_intersection(x_axis, y_one).has_value());
  CHECK_FALSE(line_intersection(diag, diag).has_value());

  auto half = line_intersection(diag, anti);
  REQUIRE(half.has_value());
  CHECK(*half == pt(1, 2, 1, 2));
}

TEST_CASE("canonical line form deduplicates") {
  Line a = Line::through(pt(0, 0), pt(1, 1));
  Line b = Line::through(pt(3, 3), pt(-2, -2));
  CHECK(a == b);
  Line v1 = Line::through(pt(1, 0), pt(1, 5));
  Line v2 = Line::through(pt(1, -7), pt(1, 2));
  CHECK(v1 == v2);
}

TEST_CASE("convex clipping by half-plane") {
  auto square = ConvexRegion::make({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)});
  REQUIRE(square.has_value());

  Line x0 = Line::through(pt(0, 0), pt(0, 1));   // x = 0
  Line xh = Line::through(pt(1, 2, 0, 1), pt(1, 2, 1, 1));  // x = 1/2
  Line x2 = Line::through(pt(2, 0), pt(2, 1));   // x = 2

  // keep x >= 0: no-op
  auto noop = clip_convex_by_halfplane(*square, x0, KeepSide::Left);
  REQUIRE(noop.has_value());
  CHECK(*noop == *square);

  // keep x >= 1/2
  auto right = clip_convex_by_halfplane(*square, xh, KeepSide::Left);
  REQUIRE(right.has_value());
  auto expect = ConvexRegion::make({pt(1, 2, 0, 1), pt(1, 0), pt(1, 1), pt(1, 2, 1, 1)});
  CHECK(*right == *expect);

  // keep x >= 2: empty
  CHECK_FALSE(clip_convex_by_halfplane(*square, x2, KeepSide::Left).has_value());
}

TEST_CASE("convex region invariants") {
  // duplicate + collinear input cleans up
  auto r = ConvexRegion::make({pt(0, 0), pt(1, 0), pt(2, 0), pt(2, 2), pt(2, 2), pt(0, 2)});
  REQUIRE(r.has_value());
  CHECK(r->size() == 4);
  CHECK(r->area() == Scalar(4));
  CHECK(r->centroid() == pt(1, 1));

  CHECK_FALSE(ConvexRegion::make({pt(0, 0), pt(1, 0), pt(2, 0)}).has_value());  // zero area
  CHECK_FALSE(ConvexRegion::make({pt(0, 0), pt(0, 1), pt(1, 0)}).has_value());  // CW ring
  // non-convex ring
  CHECK_FALSE(
      ConvexRegion::make({pt(0, 0), pt(2, 0), pt(2, 2), pt(1, 1), pt(0, 2)}).has_value());
}

TEST_CASE("convex region point location") {
  auto r = ConvexRegion::make({pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)});
  CHECK(r->locate(pt(1, 1)) == Location::Inside);
  CHECK(r->locate(pt(0, 1)) == Location::Boundary);
  CHECK(r->locate(pt(2, 2)) == Location::Boundary);
  CHECK(r->locate(pt(3, 1)) == Location::Outside);
}

TEST_CASE("simple polygon validation") {
  CHECK_THROWS_AS(SimplePolygon::make({pt(0, 0), pt(1, 1)}), TooFewVertices);
  // bowtie
  CHECK_THROWS_AS(SimplePolygon::make({pt(0, 0), pt(1, 1), pt(1, 0), pt(0, 1)}), NotSimple);
  // clockwise ring is auto-reversed
  SimplePolygon p = SimplePolygon::make({pt(0, 0), pt(0, 1), pt(1, 1), pt(1, 0)});
  CHECK(p.area() == Scalar(1));

  SimplePolygon l = lshape();
  CHECK(l.area() == Scalar(3));
  CHECK(l.reflex_vertices().size() == 1);
  CHECK(l.vertex(l.reflex_vertices()[0]) == pt(1, 1));
}

TEST_CASE("point in simple polygon") {
  SimplePolygon l = lshape();
  CHECK(l.locate(pt(1, 2, 1, 2)) == Location::Inside);
  CHECK(l.locate(pt(3, 2, 3, 2)) == Location::Outside);  // removed quadrant
  CHECK(l.locate(pt(1, 1)) == Location::Boundary);
  CHECK(l.locate(pt(1, 1, 3, 2)) == Location::Boundary);  // on the x=1 wall
  CHECK(l.locate(pt(1, 1, 1, 2)) == Location::Inside);    // x=1 below the wall is interior
  CHECK(l.locate(pt(5, 1)) == Location::Outside);
}

TEST_CASE("convex region inside ring test") {
  SimplePolygon l = lshape();
  auto in_arm = ConvexRegion::make({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)});
  CHECK(convex_inside_ring(*in_arm, l.vertices()));
  // spans the reflex notch: boundary passes through its interior
  auto spanning = ConvexRegion::make({pt(1, 2, 1, 2), pt(3, 2, 1, 2), pt(3, 2, 3, 2), pt(1, 2, 3, 2)});
  CHECK_FALSE(convex_inside_ring(*spanning, l.vertices()));
  // shares boundary but stays inside
  auto lower = ConvexRegion::make({pt(0, 0), pt(2, 0), pt(2, 1), pt(0, 1)});
  CHECK(convex_inside_ring(*lower, l.vertices()));
}
