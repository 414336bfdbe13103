#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "trop/rational.hpp"

namespace trop {

/// Linear constraint a.x (rel) b over exact rationals.
struct LinCon {
  enum class Rel { le, lt, eq };
  std::vector<Rat> a;
  Rat b;
  Rel rel = Rel::le;
};

/// H-polyhedron in n variables, possibly with strict faces removed (used
/// for relative-interior queries). All computations are exact.
struct Polytope {
  int n = 0;
  std::vector<LinCon> cons;

  static Polytope in_vars(int n) { return Polytope{n, {}}; }

  void add(std::vector<Rat> a, Rat b, LinCon::Rel rel = LinCon::Rel::le) {
    cons.push_back({std::move(a), std::move(b), rel});
  }
};

namespace detail {

inline void normalize_con(LinCon& c) {
  Rat scale(0);
  for (const auto& v : c.a)
    if (v != 0) {
      scale = abs(v);
      break;
    }
  if (scale == 0) return;
  for (auto& v : c.a) v /= scale;
  c.b /= scale;
}

/// Substitutes out all equalities; returns false on plain inconsistency.
/// On success `ineqs` holds the reduced system in the same variable space
/// with eliminated variables expressed via `subs` (var -> affine row).
inline bool reduce_equalities(const Polytope& p, std::vector<LinCon>& ineqs,
                              std::vector<std::optional<std::pair<std::vector<Rat>, Rat>>>& subs) {
  std::vector<LinCon> eqs, rest;
  for (const auto& c : p.cons)
    (c.rel == LinCon::Rel::eq ? eqs : rest).push_back(c);
  subs.assign(p.n, std::nullopt);

  auto apply_subs = [&](LinCon& c) {
    for (int v = 0; v < p.n; ++v) {
      if (!subs[v] || c.a[v] == 0) continue;
      Rat f = c.a[v];
      c.a[v] = 0;
      for (int w = 0; w < p.n; ++w) c.a[w] += f * subs[v]->first[w];
      c.b -= f * subs[v]->second;
    }
  };

  for (auto eq : eqs) {
    apply_subs(eq);
    int pivot = -1;
    for (int v = 0; v < p.n; ++v)
      if (eq.a[v] != 0) {
        pivot = v;
        break;
      }
    if (pivot < 0) {
      if (eq.b != 0) return false;
      continue;
    }
    // pivot = (b - sum other terms) / coeff
    std::vector<Rat> row(p.n, Rat(0));
    Rat coef = eq.a[pivot];
    for (int v = 0; v < p.n; ++v)
      if (v != pivot) row[v] = -eq.a[v] / coef;
    Rat off = eq.b / coef;
    // Fold into existing substitutions.
    for (auto& s : subs) {
      if (!s || s->first[pivot] == 0) continue;
      Rat f = s->first[pivot];
      s->first[pivot] = 0;
      for (int w = 0; w < p.n; ++w) s->first[w] += f * row[w];
      s->second += f * off;
    }
    subs[pivot] = {row, off};
  }
  ineqs.clear();
  for (auto c : rest) {
    apply_subs(c);
    ineqs.push_back(std::move(c));
  }
  return true;
}

struct FMLevel {
  int var;
  std::vector<LinCon> cons;  // system before eliminating var
};

/// Fourier-Motzkin elimination. Returns feasibility; levels (innermost
/// last) allow back-substitution for a sample point.
inline bool fourier_motzkin(int n, std::vector<LinCon> cons,
                            std::vector<FMLevel>* levels = nullptr) {
  for (int var = n - 1; var >= 0; --var) {
    if (levels) levels->push_back({var, cons});
    std::vector<LinCon> lows, highs, rest;
    for (auto& c : cons) {
      if (c.a[var] > 0)
        highs.push_back(c);
      else if (c.a[var] < 0)
        lows.push_back(c);
      else
        rest.push_back(c);
    }
    for (const auto& lo : lows)
      for (const auto& hi : highs) {
        LinCon combo;
        combo.a.assign(n, Rat(0));
        Rat cl = -lo.a[var], ch = hi.a[var];
        for (int v = 0; v < n; ++v)
          combo.a[v] = lo.a[v] * ch + hi.a[v] * cl;
        combo.b = lo.b * ch + hi.b * cl;
        combo.rel = (lo.rel == LinCon::Rel::lt || hi.rel == LinCon::Rel::lt)
                        ? LinCon::Rel::lt
                        : LinCon::Rel::le;
        normalize_con(combo);
        rest.push_back(std::move(combo));
      }
    // Deduplicate to keep the blowup in check.
    std::sort(rest.begin(), rest.end(), [](const LinCon& x, const LinCon& y) {
      if (x.a != y.a) return x.a < y.a;
      if (x.b != y.b) return x.b < y.b;
      return x.rel < y.rel;
    });
    rest.erase(std::unique(rest.begin(), rest.end(),
                           [](const LinCon& x, const LinCon& y) {
                             return x.a == y.a && x.b == y.b && x.rel == y.rel;
                           }),
               rest.end());
    cons = std::move(rest);
  }
  for (const auto& c : cons) {
    if (c.rel == LinCon::Rel::lt) {
      if (!(Rat(0) < c.b)) return false;
    } else {
      if (!(Rat(0) <= c.b)) return false;
    }
  }
  return true;
}

}  // namespace detail

inline bool feasible(const Polytope& p) {
  std::vector<LinCon> ineqs;
  std::vector<std::optional<std::pair<std::vector<Rat>, Rat>>> subs;
  if (!detail::reduce_equalities(p, ineqs, subs)) return false;
  return detail::fourier_motzkin(p.n, std::move(ineqs));
}

/// A point of the polyhedron (midpoints of the feasible intervals during
/// back-substitution); nullopt when infeasible.
inline std::optional<std::vector<Rat>> sample_point(const Polytope& p) {
  std::vector<LinCon> ineqs;
  std::vector<std::optional<std::pair<std::vector<Rat>, Rat>>> subs;
  if (!detail::reduce_equalities(p, ineqs, subs)) return std::nullopt;
  std::vector<detail::FMLevel> levels;
  if (!detail::fourier_motzkin(p.n, ineqs, &levels)) return std::nullopt;

  std::vector<Rat> x(p.n, Rat(0));
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    int var = it->var;
    bool has_lo = false, has_hi = false, lo_strict = false, hi_strict = false;
    Rat lo, hi;
    for (const auto& c : it->cons) {
      if (c.a[var] == 0) continue;
      Rat bound = c.b;
      for (int v = 0; v < p.n; ++v)
        if (v != var) bound -= c.a[v] * x[v];
      bound /= c.a[var];
      if (c.a[var] > 0) {  // upper bound
        if (!has_hi || bound < hi ||
            (bound == hi && c.rel == LinCon::Rel::lt)) {
          hi = bound;
          hi_strict = c.rel == LinCon::Rel::lt;
        }
        has_hi = true;
      } else {  // lower bound
        if (!has_lo || bound > lo ||
            (bound == lo && c.rel == LinCon::Rel::lt)) {
          lo = bound;
          lo_strict = c.rel == LinCon::Rel::lt;
        }
        has_lo = true;
      }
    }
    if (has_lo && has_hi)
      x[var] = (lo + hi) / 2;
    else if (has_lo)
      x[var] = lo_strict ? lo + 1 : lo;
    else if (has_hi)
      x[var] = hi_strict ? hi - 1 : hi;
    else
      x[var] = 0;
    if (has_lo && has_hi && lo == hi) {
      if (lo_strict || hi_strict) return std::nullopt;
      x[var] = lo;
    }
  }
  // Resolve substituted variables.
  for (int v = p.n - 1; v >= 0; --v) {
    if (!subs[v]) continue;
    Rat value = subs[v]->second;
    for (int w = 0; w < p.n; ++w) value += subs[v]->first[w] * x[w];
    x[v] = value;
  }
  return x;
}

/// Indices of the `le` constraints that hold with equality on the whole
/// polyhedron (implicit equalities).
inline std::vector<int> implicit_equalities(const Polytope& p) {
  std::vector<int> out;
  for (std::size_t i = 0; i < p.cons.size(); ++i) {
    if (p.cons[i].rel != LinCon::Rel::le) continue;
    Polytope q = p;
    q.cons[i].rel = LinCon::Rel::lt;
    if (!feasible(q)) out.push_back(static_cast<int>(i));
  }
  return out;
}

/// Affine dimension of the polyhedron, -1 when empty.
inline int dimension(const Polytope& p) {
  if (!feasible(p)) return -1;
  std::vector<std::vector<Rat>> rows;
  for (const auto& c : p.cons)
    if (c.rel == LinCon::Rel::eq) rows.push_back(c.a);
  for (int i : implicit_equalities(p)) rows.push_back(p.cons[i].a);
  // Rank of the equality directions.
  int rank = 0;
  for (int col = 0; col < p.n && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (rows[r][col] != 0) {
        piv = static_cast<int>(r);
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == rank || rows[r][col] == 0) continue;
      Rat f = rows[r][col] / rows[rank][col];
      for (int v = 0; v < p.n; ++v) rows[r][v] -= f * rows[rank][v];
    }
    ++rank;
  }
  return p.n - rank;
}

/// Membership of an exact point.
inline bool contains(const Polytope& p, const std::vector<Rat>& x) {
  for (const auto& c : p.cons) {
    Rat v(0);
    for (int i = 0; i < p.n; ++i) v += c.a[i] * x[i];
    switch (c.rel) {
      case LinCon::Rel::le:
        if (!(v <= c.b)) return false;
        break;
      case LinCon::Rel::lt:
        if (!(v < c.b)) return false;
        break;
      case LinCon::Rel::eq:
        if (v != c.b) return false;
        break;
    }
  }
  return true;
}

/// Relative-interior sample: strict versions of all non-implicit
/// inequalities.
inline std::optional<std::vector<Rat>> relint_point(const Polytope& p) {
  auto implicit = implicit_equalities(p);
  std::set<int> imp(implicit.begin(), implicit.end());
  Polytope q = p;
  for (std::size_t i = 0; i < q.cons.size(); ++i) {
    if (q.cons[i].rel != LinCon::Rel::le) continue;
    q.cons[i].rel = imp.count(static_cast<int>(i)) ? LinCon::Rel::eq
                                                   : LinCon::Rel::lt;
  }
  return sample_point(q);
}

}  // namespace trop
