#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "trop/intersection.hpp"

using namespace trop;

namespace {

TropPoly tp(std::vector<std::tuple<long, long, std::string>> entries) {
  TropPoly t;
  for (auto& [i, j, v] : entries) t.coeffs[{i, j}] = parse_rat(v);
  return t;
}

TropPoly line_trop() { return tp({{0, 0, "0"}, {1, 0, "0"}, {0, 1, "0"}}); }
TropPoly conic12_trop() { return tp({{1, 0, "0"}, {1, 1, "0"}, {0, 1, "1"}}); }
TropPoly conic52f_trop() { return tp({{1, 0, "0"}, {0, 1, "0"}, {1, 1, "0"}}); }
TropPoly conic52g_trop() {
  return tp({{1, 0, "0"}, {0, 1, "0"}, {1, 1, "0"},
             {2, 0, "1"}, {0, 2, "1"}, {0, 0, "1"}});
}

bool has_seg(const IntersectionComplex& ic, Point2 a, Point2 b) {
  for (const auto& s : ic.segments)
    if ((s.a == a && s.b == b) || (s.a == b && s.b == a)) return true;
  return false;
}

}  // namespace

TEST_CASE("line and conic meet in the segment L") {
  auto ic = intersect_complex(curve_of(line_trop()), curve_of(conic12_trop()));
  REQUIRE(ic.segments.size() == 1);
  CHECK(ic.rays.empty());
  CHECK(has_seg(ic, {Rat(0), Rat(0)}, {Rat(1), Rat(0)}));
  std::set<Point2> pts(ic.points.begin(), ic.points.end());
  CHECK(pts.count({Rat(0), Rat(0)}));
  CHECK(pts.count({Rat(1), Rat(0)}));
  // Attachments: at (0,0) the line's other rays leave the complex; at (1,0)
  // the (1,0)-ray continues past the segment.
  bool found00 = false, found10 = false;
  for (const auto& a : ic.attachments) {
    if (a.at == Point2{Rat(0), Rat(0)}) {
      found00 = true;
      CHECK(a.out_dirs.size() == 2);
    }
    if (a.at == Point2{Rat(1), Rat(0)}) {
      found10 = true;
      REQUIRE(a.out_dirs.size() == 1);
      CHECK(a.out_dirs[0] == PrimitiveDir{1, 0});
    }
  }
  CHECK(found00);
  CHECK(found10);
}

TEST_CASE("two conics meet in a three-segment star") {
  auto ic = intersect_complex(curve_of(conic52f_trop()), curve_of(conic52g_trop()));
  CHECK(ic.segments.size() == 3);
  CHECK(ic.rays.empty());
  CHECK(has_seg(ic, {Rat(0), Rat(0)}, {Rat(-1), Rat(0)}));
  CHECK(has_seg(ic, {Rat(0), Rat(0)}, {Rat(0), Rat(-1)}));
  CHECK(has_seg(ic, {Rat(0), Rat(0)}, {Rat(1), Rat(1)}));
}

TEST_CASE("transversal tropical lines meet in one point") {
  auto l1 = line_trop();
  TropPoly l2 = tp({{0, 0, "3"}, {1, 0, "0"}, {0, 1, "1"}});
  auto ic = intersect_complex(curve_of(l1), curve_of(l2));
  CHECK(ic.segments.empty());
  CHECK(ic.rays.empty());
  REQUIRE(ic.points.size() == 1);
  // Vertex of l2 sits at (3, 2); its (-1,-1)-ray crosses the first line's
  // horizontal ray at (1, 0).
  CHECK(ic.points[0] == Point2{Rat(1), Rat(0)});
  REQUIRE(ic.attachments.size() == 1);
  CHECK(ic.attachments[0].out_dirs.size() == 2);
}

TEST_CASE("identical curves intersect in themselves") {
  auto c = curve_of(line_trop());
  auto ic = intersect_complex(c, c);
  CHECK(ic.segments.empty());
  CHECK(ic.rays.size() == 3);
  CHECK(ic.points.size() == 1);
  CHECK(ic.attachments.empty());
  CHECK(ic.contains({Rat(5), Rat(0)}));
  CHECK(ic.contains({Rat(-2), Rat(-2)}));
  CHECK_FALSE(ic.contains({Rat(1), Rat(2)}));
}
