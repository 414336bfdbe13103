#include <catch2/catch_amalgamated.hpp>

#include "trop/geometry.hpp"

using namespace trop;

TEST_CASE("primitive directions and lattice lengths") {
  CHECK(make_primitive(4, -6) == PrimitiveDir{2, -3});
  CHECK(primitive_of({make_rat(2, 3), make_rat(2, 3)}) == PrimitiveDir{1, 1});
  CHECK(lattice_length(Point2{Rat(0), Rat(0)},
                       Point2{make_rat(2, 3), make_rat(2, 3)}) ==
        make_rat(2, 3));
  CHECK(lattice_length(Point2{Rat(-1), Rat(1)}, Point2{Rat(2), Rat(1)}) == 3);
}

TEST_CASE("convex hull of lattice points") {
  std::vector<LPoint> pts = {{0, 0}, {2, 0}, {0, 2}, {1, 1}, {1, 0}};
  auto hull = convex_hull(pts);
  REQUIRE(hull.size() == 3);
  CHECK(hull[0] == LPoint{0, 0});
  // degenerate: collinear
  auto seg = convex_hull({{0, 0}, {1, 1}, {2, 2}});
  REQUIRE(seg.size() == 2);
  CHECK(seg[0] == LPoint{0, 0});
  CHECK(seg[1] == LPoint{2, 2});
}

TEST_CASE("mixed volume pins the Bernstein count") {
  NewtonPolygon unit{convex_hull({{0, 0}, {1, 0}, {0, 1}})};
  CHECK(mixed_volume(unit, unit) == 1);

  NewtonPolygon lineconic{convex_hull({{1, 0}, {1, 1}, {0, 1}})};
  CHECK(mixed_volume(unit, lineconic) == 2);

  NewtonPolygon cubic{convex_hull({{1, 0}, {0, 2}, {2, 1}, {1, 1}})};
  CHECK(mixed_volume(cubic, cubic) == 3);

  NewtonPolygon conic52{convex_hull({{0, 0}, {2, 0}, {0, 2}, {1, 0}, {0, 1}, {1, 1}})};
  CHECK(mixed_volume(lineconic, conic52) == 4);
}

TEST_CASE("mixed volume of degenerate polygons") {
  NewtonPolygon seg{convex_hull({{0, 0}, {1, 1}})};
  NewtonPolygon unit{convex_hull({{0, 0}, {1, 0}, {0, 1}})};
  // Segment Minkowski polygon: sheared hexagon area check via formula.
  CHECK(mixed_volume(seg, unit) == mixed_volume(unit, seg));
  CHECK(mixed_volume(seg, seg) == 0);
}

TEST_CASE("boundary lattice length") {
  NewtonPolygon np{convex_hull({{0, 0}, {2, 0}, {0, 2}})};
  CHECK(np.boundary_lattice_length() == 6);
}
