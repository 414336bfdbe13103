#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trop/poly.hpp"
#include "trop/rational.hpp"

namespace trop {

/// Exact rational point of the tropical plane.
struct Point2 {
  Rat x;
  Rat y;

  friend bool operator==(const Point2& a, const Point2& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }
  friend bool operator<(const Point2& a, const Point2& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
  friend Point2 operator+(const Point2& a, const Point2& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend Point2 operator-(const Point2& a, const Point2& b) {
    return {a.x - b.x, a.y - b.y};
  }
  friend Point2 operator*(const Rat& s, const Point2& p) {
    return {s * p.x, s * p.y};
  }
  std::string to_string() const {
    return "(" + rat_str(x) + ", " + rat_str(y) + ")";
  }
};

inline Rat cross(const Point2& a, const Point2& b) {
  return a.x * b.y - a.y * b.x;
}
inline Rat dot(const Point2& a, const Point2& b) {
  return a.x * b.x + a.y * b.y;
}

/// Primitive integer direction: gcd(|x|,|y|) = 1, never (0,0).
struct PrimitiveDir {
  long x = 0;
  long y = 0;

  friend bool operator==(const PrimitiveDir& a, const PrimitiveDir& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const PrimitiveDir& a, const PrimitiveDir& b) {
    return !(a == b);
  }
  friend bool operator<(const PrimitiveDir& a, const PrimitiveDir& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
  PrimitiveDir negated() const { return {-x, -y}; }
  Point2 as_point() const { return {Rat(x), Rat(y)}; }
  std::string to_string() const {
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
  }
};

inline PrimitiveDir make_primitive(long dx, long dy) {
  if (dx == 0 && dy == 0)
    throw std::invalid_argument("zero vector has no primitive direction");
  long g = gcd_long(dx, dy);
  return {dx / g, dy / g};
}

/// Primitive direction of a nonzero rational vector.
inline PrimitiveDir primitive_of(const Point2& delta) {
  if (delta.x == 0 && delta.y == 0)
    throw std::invalid_argument("zero vector has no primitive direction");
  Int num_x = delta.x.get_num() * delta.y.get_den();
  Int num_y = delta.y.get_num() * delta.x.get_den();
  Int g;
  mpz_gcd(g.get_mpz_t(), num_x.get_mpz_t(), num_y.get_mpz_t());
  Int px = num_x / g;
  Int py = num_y / g;
  if (!px.fits_slong_p() || !py.fits_slong_p())
    throw std::overflow_error("primitive direction overflows long");
  return {px.get_si(), py.get_si()};
}

/// Lattice length of segment [a,b]: the lambda with b-a = lambda*(primitive).
inline Rat lattice_length(const Point2& a, const Point2& b) {
  Point2 d = b - a;
  if (d.x == 0 && d.y == 0) return Rat(0);
  PrimitiveDir u = primitive_of(d);
  return u.x != 0 ? d.x / Rat(u.x) : d.y / Rat(u.y);
}

/// Small lattice point (Newton polygon coordinates).
struct LPoint {
  long x = 0;
  long y = 0;
  friend bool operator==(const LPoint& a, const LPoint& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator<(const LPoint& a, const LPoint& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
  friend LPoint operator+(const LPoint& a, const LPoint& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend LPoint operator-(const LPoint& a, const LPoint& b) {
    return {a.x - b.x, a.y - b.y};
  }
};

inline long cross(const LPoint& a, const LPoint& b) {
  return a.x * b.y - a.y * b.x;
}

inline long lattice_length(const LPoint& a, const LPoint& b) {
  return gcd_long(b.x - a.x, b.y - a.y);
}

/// Convex hull (Andrew monotone chain), CCW, collinear points dropped.
/// Degenerate inputs yield a single point or the two segment endpoints.
inline std::vector<LPoint> convex_hull(std::vector<LPoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  auto build = [&](bool lower) {
    std::vector<LPoint> h;
    auto scan = [&](const LPoint& p) {
      while (h.size() >= 2 &&
             cross(h.back() - h[h.size() - 2], p - h[h.size() - 2]) <= 0)
        h.pop_back();
      h.push_back(p);
    };
    if (lower)
      for (const auto& p : pts) scan(p);
    else
      for (auto it = pts.rbegin(); it != pts.rend(); ++it) scan(*it);
    return h;
  };
  std::vector<LPoint> lower = build(true), upper = build(false);
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  if (lower.size() == 2 && lower[0] == lower[1]) lower.pop_back();
  return lower;  // all points collinear gives the two extreme points
}

/// Lattice polygon given by hull vertices in CCW order (may be a segment
/// or a point for degenerate supports).
struct NewtonPolygon {
  std::vector<LPoint> verts;

  static NewtonPolygon of(const BivariatePoly& f) {
    std::vector<LPoint> pts;
    for (const auto& [ij, c] : f.terms()) pts.push_back({ij.first, ij.second});
    return {convex_hull(std::move(pts))};
  }

  bool is_two_dimensional() const { return verts.size() >= 3; }

  /// Twice the Euclidean area (shoelace), an integer for lattice polygons.
  long area2() const {
    if (verts.size() < 3) return 0;
    long a = 0;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      const LPoint& p = verts[i];
      const LPoint& q = verts[(i + 1) % verts.size()];
      a += cross(p, q);
    }
    return a;  // positive for CCW
  }

  long boundary_lattice_length() const {
    if (verts.size() < 2) return 0;
    if (verts.size() == 2) return 2 * lattice_length(verts[0], verts[1]);
    long total = 0;
    for (std::size_t i = 0; i < verts.size(); ++i)
      total += lattice_length(verts[i], verts[(i + 1) % verts.size()]);
    return total;
  }

  friend NewtonPolygon minkowski_sum(const NewtonPolygon& a,
                                     const NewtonPolygon& b) {
    std::vector<LPoint> sums;
    for (const auto& p : a.verts)
      for (const auto& q : b.verts) sums.push_back(p + q);
    return {convex_hull(std::move(sums))};
  }
};

/// Normalized mixed volume of two lattice polygons: the Bernstein count
/// of torus intersection points. Euclidean mixed area, always an integer.
inline long mixed_volume(const NewtonPolygon& a, const NewtonPolygon& b) {
  NewtonPolygon s = minkowski_sum(a, b);
  long twice = s.area2() - a.area2() - b.area2();
  if (twice % 2 != 0) throw std::logic_error("mixed area is not an integer");
  return twice / 2;
}

}  // namespace trop
