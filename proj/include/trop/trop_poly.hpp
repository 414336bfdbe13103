#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "trop/geometry.hpp"
#include "trop/poly.hpp"

namespace trop {

/// Min-plus tropical polynomial: coefficient valuations indexed by the
/// source support. Value at w is min over support of c_ij + i*w1 + j*w2.
struct TropPoly {
  std::map<std::pair<long, long>, Rat> coeffs;

  friend bool operator==(const TropPoly& a, const TropPoly& b) {
    return a.coeffs == b.coeffs;
  }
};

/// Coefficient-wise valuation of a nonzero bivariate polynomial.
inline TropPoly tropicalize_poly(const BivariatePoly& f) {
  if (f.is_zero())
    throw std::invalid_argument("cannot tropicalize the zero polynomial");
  TropPoly t;
  for (const auto& [ij, c] : f.terms()) t.coeffs[ij] = *c.valuation();
  return t;
}

inline Rat trop_eval(const TropPoly& t, const Point2& w) {
  bool first = true;
  Rat best;
  for (const auto& [ij, c] : t.coeffs) {
    Rat v = c + Rat(ij.first) * w.x + Rat(ij.second) * w.y;
    if (first || v < best) {
      best = v;
      first = false;
    }
  }
  if (first) throw std::invalid_argument("empty tropical polynomial");
  return best;
}

/// Number of support monomials achieving the minimum at w.
inline int trop_tie_count(const TropPoly& t, const Point2& w) {
  Rat best = trop_eval(t, w);
  int n = 0;
  for (const auto& [ij, c] : t.coeffs)
    if (c + Rat(ij.first) * w.x + Rat(ij.second) * w.y == best) ++n;
  return n;
}

inline NewtonPolygon newton_polygon(const TropPoly& t) {
  std::vector<LPoint> pts;
  for (const auto& [ij, c] : t.coeffs) pts.push_back({ij.first, ij.second});
  return {convex_hull(std::move(pts))};
}

}  // namespace trop
