#pragma once

#include <map>
#include <utility>
#include <vector>

#include "trop/dual_subdivision.hpp"
#include "trop/errors.hpp"
#include "trop/geometry.hpp"
#include "trop/trop_poly.hpp"

namespace trop {

struct TropSegment {
  int a, b;  // vertex indices
  long weight;
  PrimitiveDir dir;  // oriented a -> b
  LPoint dual_a, dual_b;
};

struct TropRay {
  int base;  // vertex index
  PrimitiveDir dir;
  long weight;
  LPoint dual_a, dual_b;
};

/// Weighted balanced planar graph: the corner locus of a tropical
/// polynomial, with its dual subdivision attached. Degenerate 1-dimensional
/// supports yield full lines, represented as a base vertex with two
/// opposite rays.
struct TropCurve {
  std::vector<Point2> vertices;
  std::vector<TropSegment> segments;
  std::vector<TropRay> rays;
  DualSubdivision dual;
};

namespace detail {

/// Outward primitive normal of the Newton polygon at boundary edge [a,b].
inline PrimitiveDir outward_normal(const NewtonPolygon& np, const LPoint& a,
                                   const LPoint& b) {
  LPoint e = b - a;
  PrimitiveDir n = make_primitive(e.y, -e.x);
  Rat cnt(static_cast<long>(np.verts.size()));
  Point2 centroid{Rat(0), Rat(0)};
  for (const auto& v : np.verts) {
    centroid.x += Rat(v.x);
    centroid.y += Rat(v.y);
  }
  centroid.x /= cnt;
  centroid.y /= cnt;
  Rat side = Rat(n.x) * (centroid.x - Rat(a.x)) + Rat(n.y) * (centroid.y - Rat(a.y));
  if (side > 0) n = n.negated();
  return n;
}

}  // namespace detail

/// Corner locus of a tropical polynomial, stratified into vertices,
/// bounded segments, and unbounded rays; edge weights are the lattice
/// lengths of their dual edges.
inline TropCurve curve_of(const TropPoly& t) {
  if (t.coeffs.size() < 2)
    throw EmptyCurve("tropical polynomial with fewer than two monomials");
  TropCurve c;
  c.dual = build_dual_subdivision(t);

  if (c.dual.dim == 1) {
    // Parallel lines, one per lower-hull piece of the lifted segment.
    for (const auto& [A, B] : c.dual.segments_1d) {
      Rat ca = t.coeffs.at({A.x, A.y});
      Rat cb = t.coeffs.at({B.x, B.y});
      long p = A.x - B.x, q = A.y - B.y;
      Rat k = cb - ca;
      Point2 base = p != 0 ? Point2{k / Rat(p), Rat(0)}
                           : Point2{Rat(0), k / Rat(q)};
      int vi = static_cast<int>(c.vertices.size());
      c.vertices.push_back(base);
      PrimitiveDir dir = make_primitive(-q, p);
      long w = lattice_length(A, B);
      c.rays.push_back({vi, dir, w, A, B});
      c.rays.push_back({vi, dir.negated(), w, A, B});
    }
    return c;
  }
  if (c.dual.dim < 1) throw EmptyCurve("point Newton polygon");

  std::map<int, int> cell_to_vertex;
  for (std::size_t ci = 0; ci < c.dual.cells.size(); ++ci) {
    cell_to_vertex[static_cast<int>(ci)] = static_cast<int>(c.vertices.size());
    c.vertices.push_back(c.dual.cells[ci].dual_vertex());
  }
  for (const auto& e : c.dual.edges) {
    long w = lattice_length(e.a, e.b);
    if (e.cell_right >= 0) {
      int va = cell_to_vertex[e.cell_left];
      int vb = cell_to_vertex[e.cell_right];
      Point2 delta = c.vertices[vb] - c.vertices[va];
      c.segments.push_back({va, vb, w, primitive_of(delta), e.a, e.b});
    } else {
      int v = cell_to_vertex[e.cell_left];
      PrimitiveDir n = detail::outward_normal(c.dual.newton, e.a, e.b);
      c.rays.push_back({v, n.negated(), w, e.a, e.b});
    }
  }
  return c;
}

/// True iff every dual cell is a triangle of normalized area 1.
inline bool is_smooth(const TropPoly& t) {
  DualSubdivision d = build_dual_subdivision(t);
  if (d.dim < 2) return d.dim == 0;  // segments are not unimodular triangles
  for (const auto& cell : d.cells) {
    if (cell.verts.size() != 3) return false;
    long a2 = cross(cell.verts[1] - cell.verts[0], cell.verts[2] - cell.verts[0]);
    if (a2 != 1 && a2 != -1) return false;
  }
  return true;
}

/// Weighted sum of outgoing primitive directions vanishes at every vertex.
inline bool check_balanced(const TropCurve& c) {
  std::vector<std::pair<long, long>> sums(c.vertices.size(), {0, 0});
  for (const auto& s : c.segments) {
    sums[s.a].first += s.weight * s.dir.x;
    sums[s.a].second += s.weight * s.dir.y;
    sums[s.b].first -= s.weight * s.dir.x;
    sums[s.b].second -= s.weight * s.dir.y;
  }
  for (const auto& r : c.rays) {
    sums[r.base].first += r.weight * r.dir.x;
    sums[r.base].second += r.weight * r.dir.y;
  }
  for (const auto& [sx, sy] : sums)
    if (sx != 0 || sy != 0) return false;
  return true;
}

}  // namespace trop
