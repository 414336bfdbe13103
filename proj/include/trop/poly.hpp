#pragma once

#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "trop/errors.hpp"
#include "trop/puiseux.hpp"
#include "trop/rational.hpp"

namespace trop {

/// Dense univariate polynomial over PuiseuxScalar, indexed by degree.
/// The leading coefficient is nonzero unless the polynomial is zero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<PuiseuxScalar> coeffs) : c_(std::move(coeffs)) {
    trim();
  }

  static UniPoly zero() { return UniPoly(); }
  static UniPoly constant(PuiseuxScalar s) {
    return UniPoly(std::vector<PuiseuxScalar>{std::move(s)});
  }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }

  /// Order: lowest degree with a nonzero coefficient (0 for the zero poly).
  long ord() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return static_cast<long>(i);
    return 0;
  }

  const PuiseuxScalar& coeff(std::size_t i) const {
    static const PuiseuxScalar kZero;
    return i < c_.size() ? c_[i] : kZero;
  }
  const std::vector<PuiseuxScalar>& coeffs() const { return c_; }
  const PuiseuxScalar& leading() const { return c_.back(); }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<PuiseuxScalar> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = a.coeff(i) + b.coeff(i);
    return UniPoly(std::move(out));
  }
  friend UniPoly operator-(const UniPoly& a) {
    std::vector<PuiseuxScalar> out(a.c_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = -a.c_[i];
    return UniPoly(std::move(out));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    return a + (-b);
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    std::vector<PuiseuxScalar> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        out[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(out));
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) {
    return !(a == b);
  }

  /// Exact polynomial division (throws std::domain_error when inexact).
  UniPoly divide_exact(const UniPoly& b) const {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    if (is_zero()) return zero();
    if (degree() < b.degree()) throw std::domain_error("inexact poly division");
    std::vector<PuiseuxScalar> rem = c_;
    std::vector<PuiseuxScalar> quot(c_.size() - b.c_.size() + 1);
    for (long k = static_cast<long>(quot.size()) - 1; k >= 0; --k) {
      const PuiseuxScalar& top = rem[k + b.degree()];
      if (top.is_zero()) continue;
      PuiseuxScalar q = top.divide_exact(b.leading());
      quot[k] = q;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        rem[k + j] -= q * b.c_[j];
    }
    for (const auto& r : rem)
      if (!r.is_zero()) throw std::domain_error("inexact poly division");
    return UniPoly(std::move(quot));
  }

  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
      if (c_[i].is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << c_[i].to_string() << ")";
      if (i >= 1) os << "*" << var;
      if (i >= 2) os << "^" << i;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<PuiseuxScalar> c_;
};

enum class Var { x, y };

/// Sparse bivariate polynomial over PuiseuxScalar. No zero values stored.
class BivariatePoly {
 public:
  using Support = std::map<std::pair<long, long>, PuiseuxScalar>;

  BivariatePoly() = default;

  void set(long i, long j, PuiseuxScalar c) {
    if (c.is_zero())
      terms_.erase({i, j});
    else
      terms_[{i, j}] = std::move(c);
  }

  void add(long i, long j, const PuiseuxScalar& c) {
    auto key = std::make_pair(i, j);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_[key] = c;
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  const Support& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  PuiseuxScalar coeff(long i, long j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? PuiseuxScalar::zero() : it->second;
  }

  long degree_in(Var v) const {
    long d = -1;
    for (const auto& [ij, c] : terms_)
      d = std::max(d, v == Var::x ? ij.first : ij.second);
    return d;
  }

  friend BivariatePoly operator+(const BivariatePoly& a,
                                 const BivariatePoly& b) {
    BivariatePoly out = a;
    for (const auto& [ij, c] : b.terms_) out.add(ij.first, ij.second, c);
    return out;
  }
  friend BivariatePoly operator*(const BivariatePoly& a,
                                 const BivariatePoly& b) {
    BivariatePoly out;
    for (const auto& [ij, c] : a.terms_)
      for (const auto& [kl, d] : b.terms_)
        out.add(ij.first + kl.first, ij.second + kl.second, c * d);
    return out;
  }
  friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) {
    return a.terms_ == b.terms_;
  }

  /// Coefficient vector in `v`, each entry a UniPoly in the other variable.
  std::vector<UniPoly> as_univariate_in(Var v) const {
    long dv = degree_in(v);
    long dw = degree_in(v == Var::x ? Var::y : Var::x);
    if (dv < 0) return {};
    std::vector<std::vector<PuiseuxScalar>> rows(
        dv + 1, std::vector<PuiseuxScalar>(dw + 1));
    for (const auto& [ij, c] : terms_) {
      long a = v == Var::x ? ij.first : ij.second;
      long b = v == Var::x ? ij.second : ij.first;
      rows[a][b] = c;
    }
    std::vector<UniPoly> out;
    out.reserve(rows.size());
    for (auto& r : rows) out.emplace_back(std::move(r));
    return out;
  }

 private:
  Support terms_;
};

namespace detail {

/// Fraction-free (Bareiss) determinant over an exact integral domain.
/// Row swaps flip the sign; divisions by previous pivots are exact.
inline UniPoly bareiss_determinant(std::vector<std::vector<UniPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return UniPoly::constant(PuiseuxScalar::one());
  int sign = 1;
  UniPoly prev = UniPoly::constant(PuiseuxScalar::one());
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k].is_zero()) ++piv;
    if (piv == n) return UniPoly::zero();
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        UniPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = num.divide_exact(prev);
      }
      m[i][k] = UniPoly::zero();
    }
    prev = m[k][k];
  }
  UniPoly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

}  // namespace detail

/// Sylvester resultant of f and g viewed as univariate in `v`; the result
/// is a polynomial in the other variable. Rows carry f's coefficients in
/// descending degree (deg g shifts), then g's (deg f shifts).
inline UniPoly resultant_wrt(const BivariatePoly& f, const BivariatePoly& g,
                             Var v) {
  std::vector<UniPoly> fc = f.as_univariate_in(v);
  std::vector<UniPoly> gc = g.as_univariate_in(v);
  const long m = static_cast<long>(fc.size()) - 1;
  const long n = static_cast<long>(gc.size()) - 1;
  if (m < 1 || n < 1)
    throw std::invalid_argument("resultant needs positive degree in the variable");
  const long size = m + n;
  std::vector<std::vector<UniPoly>> mat(
      size, std::vector<UniPoly>(size, UniPoly::zero()));
  for (long r = 0; r < n; ++r)
    for (long k = 0; k <= m; ++k) mat[r][r + k] = fc[m - k];
  for (long r = 0; r < m; ++r)
    for (long k = 0; k <= n; ++k) mat[n + r][r + k] = gc[n - k];
  UniPoly det = detail::bareiss_determinant(std::move(mat));
  if (det.is_zero())
    throw IdenticallyZeroResultant(
        "resultant vanishes identically: curves share a component");
  return det;
}

/// Root valuations of a nonzero univariate polynomial with multiplicities,
/// read off the lower hull of (degree, coefficient valuation). Valuations
/// are the negatives of the hull slopes; roots at zero (trailing zero
/// coefficients) are excluded and counted separately.
struct RootValuations {
  std::vector<std::pair<Rat, long>> vals;  // (valuation, multiplicity), ascending
  long zero_roots = 0;

  long total_multiplicity() const {
    long t = 0;
    for (const auto& [v, m] : vals) t += m;
    return t;
  }

  /// Expansion into a flat multiset, ascending.
  std::vector<Rat> expanded() const {
    std::vector<Rat> out;
    for (const auto& [v, m] : vals)
      for (long i = 0; i < m; ++i) out.push_back(v);
    return out;
  }
};

inline RootValuations newton_root_valuations(const UniPoly& p) {
  if (p.is_zero())
    throw std::invalid_argument("newton_root_valuations of the zero polynomial");
  RootValuations out;
  out.zero_roots = p.ord();
  std::vector<std::pair<long, Rat>> pts;  // (degree, valuation)
  for (long i = p.ord(); i <= p.degree(); ++i) {
    const auto& c = p.coeff(static_cast<std::size_t>(i));
    if (!c.is_zero()) pts.emplace_back(i, *c.valuation());
  }
  if (pts.size() < 2) return out;
  // Lower convex hull, left to right (Andrew chain on the lower side).
  std::vector<std::pair<long, Rat>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      // Keep b only if it lies strictly below segment a-pt.
      Rat lhs = (b.second - a.second) * Rat(pt.first - a.first);
      Rat rhs = (pt.second - a.second) * Rat(b.first - a.first);
      if (lhs < rhs) break;
      hull.pop_back();
    }
    hull.push_back(pt);
  }
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    long width = hull[k + 1].first - hull[k].first;
    Rat slope = (hull[k + 1].second - hull[k].second) / Rat(width);
    out.vals.emplace_back(-slope, width);
  }
  // Hull slopes increase left to right, so valuations come out descending.
  std::reverse(out.vals.begin(), out.vals.end());
  return out;
}

}  // namespace trop
