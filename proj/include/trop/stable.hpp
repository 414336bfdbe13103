#pragma once

#include <cstdlib>
#include <optional>
#include <vector>

#include "trop/divisor.hpp"
#include "trop/errors.hpp"
#include "trop/intersection.hpp"
#include "trop/trop_curve.hpp"

namespace trop {

namespace detail {

/// First-order symbolic value a + b*eps, ordered lexicographically: the
/// sign of a + b*eps for all sufficiently small eps > 0.
struct EpsRat {
  Rat a, b;
};

inline int eps_cmp(const EpsRat& u, const EpsRat& v) {
  if (u.a != v.a) return u.a < v.a ? -1 : 1;
  if (u.b != v.b) return u.b < v.b ? -1 : 1;
  return 0;
}

struct DegenerateShift {};  // crossing pinned to a cell endpoint for all eps

/// Accumulates the eps -> 0 limits of (X + eps*v) cap Y over transversal
/// edge crossings. Throws DegenerateShift when a crossing sits exactly on
/// a cell boundary independently of eps (non-generic v).
inline Divisor stable_divisor_for(const std::vector<Cell1>& xs,
                                  const std::vector<Cell1>& ys,
                                  const Point2& v) {
  Divisor out;
  for (const auto& ex : xs)
    for (const auto& ey : ys) {
      Rat det = cross(ex.dir, ey.dir);
      if (det == 0) continue;  // parallel: no transversal crossing for small eps
      Point2 delta = ey.base - ex.base;
      EpsRat s{cross(delta, ey.dir) / det, -cross(v, ey.dir) / det};
      EpsRat r{cross(delta, ex.dir) / det, -cross(v, ex.dir) / det};
      auto in_range = [](const EpsRat& t, const std::optional<Rat>& tmax) {
        if (t.a == 0 && t.b == 0) throw DegenerateShift{};
        if (eps_cmp(t, {Rat(0), Rat(0)}) < 0) return false;
        if (tmax) {
          if (t.a == *tmax && t.b == 0) throw DegenerateShift{};
          if (eps_cmp(t, {*tmax, Rat(0)}) > 0) return false;
        }
        return true;
      };
      if (!in_range(s, ex.tmax) || !in_range(r, ey.tmax)) continue;
      Point2 limit = ex.at(s.a);
      long mult = ex.weight * ey.weight *
                  std::labs(ex.pdir.x * ey.pdir.y - ex.pdir.y * ey.pdir.x);
      out.add_point(limit, mult);
    }
  return out;
}

}  // namespace detail

/// Stable tropical intersection divisor: the limit of (X + eps*v) cap Y as
/// eps -> 0 for a generic displacement v, with crossing multiplicities
/// w1*w2*|det(u1,u2)|. Computed for two independent generic displacements;
/// disagreement raises GenericityFailure.
inline Divisor stable_divisor(const TropCurve& cx, const TropCurve& cy) {
  std::vector<Cell1> xs = curve_cells(cx), ys = curve_cells(cy);
  static const long kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                 23, 29, 31, 37, 41, 43, 47, 53};
  std::vector<Divisor> results;
  for (long p : kPrimes) {
    Point2 v{Rat(1), make_rat(1, p)};
    bool parallel = false;
    for (const auto& c : xs)
      if (cross(v, c.dir) == 0) parallel = true;
    for (const auto& c : ys)
      if (cross(v, c.dir) == 0) parallel = true;
    if (parallel) continue;
    try {
      results.push_back(detail::stable_divisor_for(xs, ys, v));
    } catch (const detail::DegenerateShift&) {
      continue;
    }
    if (results.size() == 2) {
      if (!(results[0] == results[1]))
        throw GenericityFailure("stable intersection depends on displacement");
      return results[0];
    }
  }
  throw GenericityFailure("no generic displacement vector found");
}

}  // namespace trop
