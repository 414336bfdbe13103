#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "trop/geometry.hpp"
#include "trop/trop_curve.hpp"

namespace trop {

/// Closed 1-cell of a curve in parametric form: base + t*dir with
/// t in [0, tmax] (segment) or [0, inf) (ray).
struct Cell1 {
  Point2 base;
  Point2 dir;
  std::optional<Rat> tmax;
  long weight = 1;
  PrimitiveDir pdir;

  bool contains(const Point2& p) const {
    Point2 d = p - base;
    if (cross(d, dir) != 0) return false;
    Rat t = dot(d, dir) / dot(dir, dir);
    if (t < 0) return false;
    return !tmax || t <= *tmax;
  }
  Rat param(const Point2& p) const { return dot(p - base, dir) / dot(dir, dir); }
  Point2 at(const Rat& t) const { return base + t * dir; }
};

inline std::vector<Cell1> curve_cells(const TropCurve& c) {
  std::vector<Cell1> out;
  for (const auto& s : c.segments) {
    Point2 a = c.vertices[s.a], b = c.vertices[s.b];
    out.push_back({a, b - a, Rat(1), s.weight, s.dir});
  }
  for (const auto& r : c.rays)
    out.push_back({c.vertices[r.base], r.dir.as_point(), std::nullopt, r.weight,
                   r.dir});
  return out;
}

/// 0- or 1-dimensional intersection of two closed cells.
struct Piece {
  enum class Kind { point, segment, ray };
  Kind kind;
  Point2 a;
  Point2 b;          // segment only
  PrimitiveDir dir;  // ray only
};

inline std::optional<Piece> intersect_cells(const Cell1& c1, const Cell1& c2) {
  Rat det = cross(c1.dir, c2.dir);
  Point2 delta = c2.base - c1.base;
  if (det != 0) {
    // Transversal lines: single candidate point.
    Rat s = cross(delta, c2.dir) / det;
    Rat r = cross(delta, c1.dir) / det;
    if (s < 0 || (c1.tmax && s > *c1.tmax)) return std::nullopt;
    if (r < 0 || (c2.tmax && r > *c2.tmax)) return std::nullopt;
    return Piece{Piece::Kind::point, c1.at(s), {}, {}};
  }
  if (cross(delta, c1.dir) != 0) return std::nullopt;  // parallel, distinct lines
  // Collinear: intersect parameter intervals on c1's line.
  Rat denom = dot(c1.dir, c1.dir);
  Rat t0 = dot(delta, c1.dir) / denom;
  Rat lambda = dot(c2.dir, c1.dir) / denom;  // c2.dir = lambda * c1.dir
  bool lo_inf = false, hi_inf = false;
  Rat lo = t0, hi = t0;
  if (c2.tmax) {
    Rat t1 = t0 + *c2.tmax * lambda;
    lo = std::min(t0, t1);
    hi = std::max(t0, t1);
  } else if (lambda > 0) {
    hi_inf = true;
  } else {
    lo_inf = true;
  }
  // Clip to c1's range [0, tmax or inf).
  if (lo_inf || lo < 0) {
    lo = Rat(0);
    lo_inf = false;
  }
  if (c1.tmax && (hi_inf || hi > *c1.tmax)) {
    hi = *c1.tmax;
    hi_inf = false;
  }
  if (!hi_inf && lo > hi) return std::nullopt;
  if (!hi_inf && lo == hi)
    return Piece{Piece::Kind::point, c1.at(lo), {}, {}};
  if (hi_inf) {
    PrimitiveDir d = c1.pdir;
    if (dot(c1.dir, d.as_point()) < 0) d = d.negated();
    return Piece{Piece::Kind::ray, c1.at(lo), {}, d};
  }
  return Piece{Piece::Kind::segment, c1.at(lo), c1.at(hi), {}};
}

/// The set-theoretic intersection of two tropical curves as a cell complex:
/// 0-cells, 1-cells (segments and rays) with pairwise disjoint relative
/// interiors, and for each 0-cell the directions in which edges of the
/// first curve leave the complex.
struct IntersectionComplex {
  struct Seg {
    Point2 a, b;
  };
  struct Ray {
    Point2 base;
    PrimitiveDir dir;
  };
  struct Attachment {
    Point2 at;
    std::vector<PrimitiveDir> out_dirs;  // first-curve edges leaving here
  };

  std::vector<Point2> points;
  std::vector<Seg> segments;
  std::vector<Ray> rays;
  std::vector<Attachment> attachments;

  bool contains(const Point2& p) const {
    for (const auto& q : points)
      if (q == p) return true;
    for (const auto& s : segments) {
      Point2 d = s.b - s.a, e = p - s.a;
      if (cross(d, e) == 0) {
        Rat t = dot(e, d) / dot(d, d);
        if (t >= 0 && t <= 1) return true;
      }
    }
    for (const auto& r : rays) {
      Point2 e = p - r.base;
      if (cross(r.dir.as_point(), e) == 0 && dot(e, r.dir.as_point()) >= 0)
        return true;
    }
    return false;
  }

  /// True when some 1-cell leaves point p in direction d.
  bool has_cell_in_direction(const Point2& p, const PrimitiveDir& d) const {
    for (const auto& s : segments) {
      if (s.a == p && primitive_of(s.b - s.a) == d) return true;
      if (s.b == p && primitive_of(s.a - s.b) == d) return true;
    }
    for (const auto& r : rays)
      if (r.base == p && r.dir == d) return true;
    return false;
  }

  bool empty() const { return points.empty() && segments.empty() && rays.empty(); }
};

inline IntersectionComplex intersect_complex(const TropCurve& cx,
                                             const TropCurve& cy) {
  std::vector<Cell1> xs = curve_cells(cx), ys = curve_cells(cy);
  std::vector<Point2> pts;
  std::vector<Piece> pieces;
  for (const auto& ex : xs)
    for (const auto& ey : ys) {
      auto piece = intersect_cells(ex, ey);
      if (!piece) continue;
      if (piece->kind == Piece::Kind::point)
        pts.push_back(piece->a);
      else
        pieces.push_back(*piece);
    }

  // Candidate 0-cells: isolated points plus endpoints of 1-dim pieces.
  for (const auto& p : pieces) {
    pts.push_back(p.a);
    if (p.kind == Piece::Kind::segment) pts.push_back(p.b);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  IntersectionComplex out;
  // Subdivide each 1-dim piece at candidate points in its relative interior.
  std::set<std::pair<Point2, Point2>> seen_segments;
  std::set<std::pair<Point2, std::pair<long, long>>> seen_rays;
  for (const auto& p : pieces) {
    if (p.kind == Piece::Kind::segment) {
      Point2 d = p.b - p.a;
      std::vector<Rat> cuts{Rat(0), Rat(1)};
      for (const auto& q : pts) {
        Point2 e = q - p.a;
        if (cross(d, e) != 0) continue;
        Rat t = dot(e, d) / dot(d, d);
        if (t > 0 && t < 1) cuts.push_back(t);
      }
      std::sort(cuts.begin(), cuts.end());
      cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
      for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Point2 a = p.a + cuts[i] * d, b = p.a + cuts[i + 1] * d;
        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        if (seen_segments.insert(key).second)
          out.segments.push_back({key.first, key.second});
      }
    } else {
      Point2 d = p.dir.as_point();
      std::vector<Rat> cuts{Rat(0)};
      for (const auto& q : pts) {
        Point2 e = q - p.a;
        if (cross(d, e) != 0) continue;
        Rat t = dot(e, d) / dot(d, d);
        if (t > 0) cuts.push_back(t);
      }
      std::sort(cuts.begin(), cuts.end());
      cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
      for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Point2 a = p.a + cuts[i] * d, b = p.a + cuts[i + 1] * d;
        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        if (seen_segments.insert(key).second)
          out.segments.push_back({key.first, key.second});
      }
      Point2 base = p.a + cuts.back() * d;
      if (seen_rays.insert({base, {p.dir.x, p.dir.y}}).second)
        out.rays.push_back({base, p.dir});
    }
  }
  out.points = std::move(pts);

  // Attachment directions: first-curve edges leaving the complex at 0-cells.
  for (const auto& p : out.points) {
    IntersectionComplex::Attachment att{p, {}};
    std::set<std::pair<long, long>> dirs;
    for (const auto& ex : xs) {
      if (!ex.contains(p)) continue;
      Rat t = ex.param(p);
      std::vector<PrimitiveDir> outs;
      if (!ex.tmax || t < *ex.tmax) outs.push_back(ex.pdir);
      if (t > 0) outs.push_back(ex.pdir.negated());
      for (const auto& d : outs)
        if (!out.has_cell_in_direction(p, d)) dirs.insert({d.x, d.y});
    }
    for (const auto& [dx, dy] : dirs) att.out_dirs.push_back({dx, dy});
    if (!att.out_dirs.empty()) out.attachments.push_back(att);
  }
  return out;
}

}  // namespace trop
