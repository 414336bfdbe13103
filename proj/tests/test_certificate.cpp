#include <catch2/catch_amalgamated.hpp>

#include "trop/certificate.hpp"
#include "trop/stable.hpp"

using namespace trop;

namespace {

Point2 pt(long x, long y) { return {Rat(x), Rat(y)}; }

TropPoly tp(std::vector<std::tuple<long, long, std::string>> entries) {
  TropPoly t;
  for (auto& [i, j, v] : entries) t.coeffs[{i, j}] = parse_rat(v);
  return t;
}

/// The line/conic setting: Trop(X) a tropical line, S the segment L from
/// (0,0) to (1,0) with attachment nodes at both ends.
MetricGraph line_conic_graph() {
  auto x = curve_of(tp({{0, 0, "0"}, {1, 0, "0"}, {0, 1, "0"}}));
  auto y = curve_of(tp({{1, 0, "0"}, {1, 1, "0"}, {0, 1, "1"}}));
  return graph_of_curve(x, intersect_complex(x, y));
}

Divisor stable_line_conic() {
  Divisor e;
  e.add_point(pt(0, 0), 1);
  e.add_point(pt(1, 0), 1);
  return e;
}

/// The identical-lines setting: S is the whole tropical line.
MetricGraph double_line_graph() {
  auto x = curve_of(tp({{0, 0, "0"}, {1, 0, "0"}, {0, 1, "0"}}));
  return graph_of_curve(x, intersect_complex(x, x));
}

/// The identical-cubics setting: triangle with rays, S everything.
MetricGraph cubic_graph() {
  auto c = curve_of(tp({{1, 1, "0"}, {1, 0, "1"}, {0, 2, "1"}, {2, 1, "1"}}));
  return graph_of_curve(c, intersect_complex(c, c));
}

}  // namespace

TEST_CASE("line/conic graph has segment L with two attachment nodes") {
  MetricGraph g = line_conic_graph();
  int a = g.node_at(pt(0, 0)), b = g.node_at(pt(1, 0));
  REQUIRE(a >= 0);
  REQUIRE(b >= 0);
  CHECK(g.nodes[a].in_s);
  CHECK(g.nodes[b].in_s);
  CHECK(g.nodes[a].attachment);
  CHECK(g.nodes[b].attachment);
  long s_arcs = 0;
  for (const auto& e : g.arcs)
    if (e.in_s) {
      ++s_arcs;
      CHECK(e.len == 1);
      CHECK_FALSE(e.infinite);
    }
  CHECK(s_arcs == 1);
}

TEST_CASE("double line graph is all marked with no attachments") {
  MetricGraph g = double_line_graph();
  CHECK(g.arcs.size() == 3);
  for (const auto& e : g.arcs) {
    CHECK(e.in_s);
    CHECK(e.infinite);
  }
  for (const auto& n : g.nodes) CHECK_FALSE(n.attachment);
}

TEST_CASE("tent certificate for interior zeros") {
  MetricGraph g = line_conic_graph();
  Divisor e = stable_line_conic();
  Divisor d;
  d.add_point({make_rat(1, 4), Rat(0)}, 1);
  d.add_point({make_rat(3, 4), Rat(0)}, 1);
  auto h = find_certificate(g, d, e);
  REQUIRE(h.has_value());
  CHECK(divisor_of(*h, g) == d - e);
  // Tent with plateau: slopes 1, 0, -1 along L.
  int arc = -1;
  for (std::size_t i = 0; i < g.arcs.size(); ++i)
    if (g.arcs[i].in_s) arc = static_cast<int>(i);
  REQUIRE(arc >= 0);
  CHECK(h->arcs[arc].slopes == std::vector<long>{1, 0, -1});
  // Vanishes at the attachment nodes.
  CHECK(h->node_values[g.node_at(pt(0, 0))] == 0);
  CHECK(h->node_values[g.node_at(pt(1, 0))] == 0);
}

TEST_CASE("certificate for D equal to E is the zero function") {
  MetricGraph g = line_conic_graph();
  Divisor e = stable_line_conic();
  auto h = find_certificate(g, e, e);
  REQUIRE(h.has_value());
  CHECK(h->is_zero());
}

TEST_CASE("asymmetric configuration admits no certificate") {
  MetricGraph g = line_conic_graph();
  Divisor e = stable_line_conic();
  Divisor d;
  d.add_point({make_rat(1, 4), Rat(0)}, 1);
  d.add_point({make_rat(1, 2), Rat(0)}, 1);
  CHECK_FALSE(find_certificate(g, d, e).has_value());
  // Raising the slope bound does not create a witness.
  CHECK_FALSE(find_certificate(g, d, e, 2).has_value());
  CHECK_FALSE(find_certificate(g, d, e, 5).has_value());
}

TEST_CASE("support outside S is rejected") {
  MetricGraph g = line_conic_graph();
  Divisor e = stable_line_conic();
  Divisor d;
  d.add_point(pt(0, 2), 1);  // on the curve but outside L
  d.add_point({make_rat(1, 2), Rat(0)}, 1);
  CHECK_THROWS_AS(find_certificate(g, d, e), SupportOutsideS);
  Divisor off;
  off.add_point(pt(5, 7), 2);  // not on the curve at all
  CHECK_THROWS_AS(find_certificate(g, off, e), SupportOutsideS);
}

TEST_CASE("double multiplicity zero at the midpoint") {
  MetricGraph g = line_conic_graph();
  Divisor e = stable_line_conic();
  Divisor d;
  d.add_point({make_rat(1, 2), Rat(0)}, 2);
  auto h = find_certificate(g, d, e);
  REQUIRE(h.has_value());
  CHECK(divisor_of(*h, g) == d - e);
}

TEST_CASE("ray-end zero on the double line via constant slope one") {
  MetricGraph g = double_line_graph();
  Divisor e;
  e.add_point(pt(0, 0), 1);
  Divisor d;
  d.add(DivKey::ray_end(pt(0, 0), {0, 1}), 1);
  auto h = find_certificate(g, d, e);
  REQUIRE(h.has_value());
  CHECK(divisor_of(*h, g) == d - e);
  // Constant slope 1 on the whole (0,1)-ray, zero elsewhere.
  for (std::size_t i = 0; i < g.arcs.size(); ++i) {
    REQUIRE(h->arcs[i].slopes.size() == 1);
    long expect = g.arcs[i].dir == PrimitiveDir{0, 1} ? 1 : 0;
    CHECK(h->arcs[i].slopes[0] == expect);
  }
}

TEST_CASE("interior zero on the double line") {
  MetricGraph g = double_line_graph();
  Divisor e;
  e.add_point(pt(0, 0), 1);
  for (Point2 z : {pt(3, 0), pt(0, 2), pt(-1, -1)}) {
    Divisor d;
    d.add_point(z, 1);
    auto h = find_certificate(g, d, e);
    REQUIRE(h.has_value());
    CHECK(divisor_of(*h, g) == d - e);
  }
}

TEST_CASE("cycle consistency on the triangle graph") {
  MetricGraph g = cubic_graph();
  Divisor e = stable_divisor(
      curve_of(tp({{1, 1, "0"}, {1, 0, "1"}, {0, 2, "1"}, {2, 1, "1"}})),
      curve_of(tp({{1, 1, "0"}, {1, 0, "1"}, {0, 2, "1"}, {2, 1, "1"}})));
  REQUIRE(e.degree() == 3);

  // Paper target configuration for (r, s) = (1/2, 1/4): two zeros on the
  // top edge, one on the diagonal; signed displacements sum to zero.
  Rat r = make_rat(1, 2), s = make_rat(1, 4);
  Divisor d;
  d.add_point({Rat(-1) + r, Rat(1)}, 1);
  d.add_point({Rat(2) - s, Rat(1)}, 1);
  d.add_point({Rat(-1) - s + r, Rat(-2) - s + r}, 1);
  auto h = find_certificate(g, d, e);
  REQUIRE(h.has_value());
  CHECK(divisor_of(*h, g) == d - e);

  // Perturb one zero: displacement sum nonzero, no certificate.
  Divisor bad;
  bad.add_point({Rat(-1) + r + make_rat(1, 8), Rat(1)}, 1);
  bad.add_point({Rat(2) - s, Rat(1)}, 1);
  bad.add_point({Rat(-1) - s + r, Rat(-2) - s + r}, 1);
  CHECK_FALSE(find_certificate(g, bad, e).has_value());
  CHECK_FALSE(find_certificate(g, bad, e, 3).has_value());
}

TEST_CASE("delta condition across the triangle edges") {
  MetricGraph g = cubic_graph();
  Divisor e;
  e.add_point(pt(-1, 1), 1);
  e.add_point(pt(2, 1), 1);
  e.add_point(pt(-1, -2), 1);

  // Two zeros on the top edge at clockwise distances 1 and 5/2 from v1,
  // one on the second edge at 5/2 from v2: displacements cancel.
  Divisor good;
  good.add_point(pt(0, 1), 1);
  good.add_point({make_rat(3, 2), Rat(1)}, 1);
  good.add_point({make_rat(-1, 2), make_rat(-3, 2)}, 1);
  auto h = find_certificate(g, good, e);
  REQUIRE(h.has_value());
  CHECK(divisor_of(*h, g) == good - e);

  // One zero per edge, strictly inside: the clockwise displacements are all
  // positive, so no certificate can exist.
  Divisor bad;
  bad.add_point(pt(0, 1), 1);
  bad.add_point({Rat(1), Rat(0)}, 1);
  bad.add_point({Rat(-1), Rat(0)}, 1);
  CHECK_FALSE(find_certificate(g, bad, e).has_value());
}
