#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "trop/geometry.hpp"
#include "trop/trop_poly.hpp"

namespace trop {

/// A 2-cell of the regular subdivision: the projection of a lower-hull
/// facet of the lifted support. `plane` holds (alpha, beta, gamma) with
/// z = alpha*i + beta*j + gamma on the facet; the dual curve vertex is
/// (-alpha, -beta).
struct DualCell {
  std::vector<LPoint> verts;  // hull vertices, CCW
  Rat alpha, beta, gamma;

  Point2 dual_vertex() const { return {-alpha, -beta}; }
};

struct DualEdge {
  LPoint a, b;     // a < b
  int cell_left;   // index into cells
  int cell_right;  // -1 when the edge lies on the Newton polygon boundary
};

/// Regular subdivision of the Newton polygon induced by the lower hull of
/// the lifted points (i, j, c_ij). `dim` is the dimension of the Newton
/// polygon; cells/edges are only populated in the 2-dimensional case. For
/// 1-dimensional supports `segments_1d` lists the lower-hull pieces of the
/// lifted segment.
struct DualSubdivision {
  int dim = 0;
  NewtonPolygon newton;
  std::vector<DualCell> cells;
  std::vector<DualEdge> edges;
  std::vector<std::pair<LPoint, LPoint>> segments_1d;
};

namespace detail {

inline bool collinear(const LPoint& a, const LPoint& b, const LPoint& c) {
  return cross(b - a, c - a) == 0;
}

}  // namespace detail

inline DualSubdivision build_dual_subdivision(const TropPoly& t) {
  DualSubdivision out;
  out.newton = newton_polygon(t);
  std::vector<std::pair<LPoint, Rat>> pts;
  for (const auto& [ij, c] : t.coeffs)
    pts.push_back({{ij.first, ij.second}, c});

  if (out.newton.verts.size() <= 1) {
    out.dim = 0;
    return out;
  }

  if (!out.newton.is_two_dimensional()) {
    out.dim = 1;
    // Lower hull along the segment: parametrize support by lattice position.
    const LPoint origin = out.newton.verts[0];
    const LPoint span = out.newton.verts[1] - out.newton.verts[0];
    long g = gcd_long(span.x, span.y);
    LPoint step{span.x / g, span.y / g};
    auto param = [&](const LPoint& p) {
      LPoint d = p - origin;
      return step.x != 0 ? d.x / step.x : d.y / step.y;
    };
    std::vector<std::pair<long, Rat>> lifted;
    for (const auto& [p, c] : pts) lifted.push_back({param(p), c});
    std::sort(lifted.begin(), lifted.end());
    std::vector<std::pair<long, Rat>> hull;
    for (const auto& pt : lifted) {
      while (hull.size() >= 2) {
        const auto& a = hull[hull.size() - 2];
        const auto& b = hull[hull.size() - 1];
        if ((b.second - a.second) * Rat(pt.first - a.first) <
            (pt.second - a.second) * Rat(b.first - a.first))
          break;
        hull.pop_back();
      }
      hull.push_back(pt);
    }
    for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
      LPoint a{origin.x + step.x * hull[k].first,
               origin.y + step.y * hull[k].first};
      LPoint b{origin.x + step.x * hull[k + 1].first,
               origin.y + step.y * hull[k + 1].first};
      out.segments_1d.push_back({a, b});
    }
    return out;
  }

  out.dim = 2;
  // Enumerate candidate facet planes through non-collinear support triples
  // and keep the supporting ones (all lifts on or above the plane).
  std::vector<DualCell> cells;
  std::set<std::pair<std::pair<Rat, Rat>, Rat>> seen;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const LPoint &A = pts[i].first, &B = pts[j].first, &C = pts[k].first;
        long det = cross(B - A, C - A);
        if (det == 0) continue;
        // Solve alpha*x + beta*y + gamma = z at A, B, C.
        Rat za = pts[i].second, zb = pts[j].second, zc = pts[k].second;
        Rat d(det);
        Rat alpha = ((zb - za) * Rat(C.y - A.y) - (zc - za) * Rat(B.y - A.y)) / d;
        Rat beta = ((zc - za) * Rat(B.x - A.x) - (zb - za) * Rat(C.x - A.x)) / d;
        Rat gamma = za - alpha * Rat(A.x) - beta * Rat(A.y);
        auto key = std::make_pair(std::make_pair(alpha, beta), gamma);
        if (seen.count(key)) continue;
        bool supporting = true;
        std::vector<LPoint> on_plane;
        for (const auto& [p, z] : pts) {
          Rat plane = alpha * Rat(p.x) + beta * Rat(p.y) + gamma;
          if (z < plane) {
            supporting = false;
            break;
          }
          if (z == plane) on_plane.push_back(p);
        }
        if (!supporting) continue;
        seen.insert(key);
        std::vector<LPoint> poly = convex_hull(on_plane);
        if (poly.size() < 3) continue;  // edge-supporting plane, not a facet
        cells.push_back({std::move(poly), alpha, beta, gamma});
      }

  // Deterministic cell order: by dual vertex, then by first polygon vertex.
  std::sort(cells.begin(), cells.end(), [](const DualCell& a, const DualCell& b) {
    Point2 va = a.dual_vertex(), vb = b.dual_vertex();
    if (!(va == vb)) return va < vb;
    return a.verts < b.verts;
  });
  out.cells = std::move(cells);

  // Collect edges with left/right cell incidence.
  std::map<std::pair<LPoint, LPoint>, std::vector<int>> edge_cells;
  for (std::size_t ci = 0; ci < out.cells.size(); ++ci) {
    const auto& v = out.cells[ci].verts;
    for (std::size_t e = 0; e < v.size(); ++e) {
      LPoint a = v[e], b = v[(e + 1) % v.size()];
      if (b < a) std::swap(a, b);
      edge_cells[{a, b}].push_back(static_cast<int>(ci));
    }
  }
  for (const auto& [ab, cs] : edge_cells) {
    DualEdge e{ab.first, ab.second, cs[0], cs.size() > 1 ? cs[1] : -1};
    out.edges.push_back(e);
  }
  return out;
}

}  // namespace trop
