#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "trop/rational.hpp"

namespace trop {

/// One term c * t^e of a Puiseux polynomial.
struct PuiseuxTerm {
  Rat coeff;
  Rat exp;
};

/// Finite sum of rational-coefficient, rational-exponent powers of t.
/// Terms are kept sorted by strictly increasing exponent with no zero
/// coefficients; the empty sum is the zero element. Arithmetic is exact,
/// so the valuation of a product is the sum of valuations with no
/// truncation caveats.
class PuiseuxScalar {
 public:
  PuiseuxScalar() = default;

  explicit PuiseuxScalar(std::vector<PuiseuxTerm> terms)
      : terms_(std::move(terms)) {
    normalize();
  }

  static PuiseuxScalar zero() { return PuiseuxScalar(); }
  static PuiseuxScalar one() { return constant(1); }

  static PuiseuxScalar constant(Rat c) {
    PuiseuxScalar s;
    if (c != 0) s.terms_.push_back({std::move(c), Rat(0)});
    return s;
  }

  /// c * t^e
  static PuiseuxScalar monomial(Rat c, Rat e) {
    PuiseuxScalar s;
    if (c != 0) s.terms_.push_back({std::move(c), std::move(e)});
    return s;
  }

  static PuiseuxScalar t_power(Rat e) { return monomial(Rat(1), std::move(e)); }

  const std::vector<PuiseuxTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Minimum exponent of a nonzero term; nullopt encodes +infinity (zero).
  std::optional<Rat> valuation() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().exp;
  }

  /// Coefficient of the valuation term (the lowest-order term).
  const PuiseuxTerm& lowest() const { return terms_.front(); }
  const PuiseuxTerm& highest() const { return terms_.back(); }

  friend PuiseuxScalar operator+(const PuiseuxScalar& a,
                                 const PuiseuxScalar& b) {
    std::vector<PuiseuxTerm> out;
    out.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      const auto& ta = a.terms_[i];
      const auto& tb = b.terms_[j];
      if (ta.exp < tb.exp) {
        out.push_back(ta);
        ++i;
      } else if (tb.exp < ta.exp) {
        out.push_back(tb);
        ++j;
      } else {
        Rat c = ta.coeff + tb.coeff;
        if (c != 0) out.push_back({std::move(c), ta.exp});
        ++i;
        ++j;
      }
    }
    for (; i < a.terms_.size(); ++i) out.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) out.push_back(b.terms_[j]);
    PuiseuxScalar s;
    s.terms_ = std::move(out);
    return s;
  }

  friend PuiseuxScalar operator-(const PuiseuxScalar& a) {
    PuiseuxScalar s = a;
    for (auto& t : s.terms_) t.coeff = -t.coeff;
    return s;
  }

  friend PuiseuxScalar operator-(const PuiseuxScalar& a,
                                 const PuiseuxScalar& b) {
    return a + (-b);
  }

  friend PuiseuxScalar operator*(const PuiseuxScalar& a,
                                 const PuiseuxScalar& b) {
    PuiseuxScalar acc;
    for (const auto& ta : a.terms_) {
      PuiseuxScalar part;
      part.terms_.reserve(b.terms_.size());
      for (const auto& tb : b.terms_)
        part.terms_.push_back({ta.coeff * tb.coeff, ta.exp + tb.exp});
      acc = acc + part;
    }
    return acc;
  }

  PuiseuxScalar& operator+=(const PuiseuxScalar& o) { return *this = *this + o; }
  PuiseuxScalar& operator-=(const PuiseuxScalar& o) { return *this = *this - o; }
  PuiseuxScalar& operator*=(const PuiseuxScalar& o) { return *this = *this * o; }

  friend bool operator==(const PuiseuxScalar& a, const PuiseuxScalar& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].coeff != b.terms_[i].coeff ||
          a.terms_[i].exp != b.terms_[i].exp)
        return false;
    return true;
  }
  friend bool operator!=(const PuiseuxScalar& a, const PuiseuxScalar& b) {
    return !(a == b);
  }

  /// Exact division; throws if b does not divide *this in the ring of
  /// finite Puiseux sums. Used by the fraction-free determinant, whose
  /// intermediate divisions are exact by construction.
  PuiseuxScalar divide_exact(const PuiseuxScalar& b) const {
    if (b.is_zero()) throw std::invalid_argument("puiseux division by zero");
    if (is_zero()) return zero();
    const Rat max_quot_exp = highest().exp - b.highest().exp;
    PuiseuxScalar rem = *this;
    PuiseuxScalar quot;
    while (!rem.is_zero()) {
      Rat qc = rem.lowest().coeff / b.lowest().coeff;
      Rat qe = rem.lowest().exp - b.lowest().exp;
      if (qe > max_quot_exp)
        throw std::domain_error("inexact puiseux division");
      PuiseuxScalar qt = monomial(qc, qe);
      quot += qt;
      rem -= qt * b;
    }
    return quot;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
      Rat c = t.coeff;
      if (first) {
        if (c < 0) {
          os << "-";
          c = -c;
        }
      } else {
        os << (c < 0 ? " - " : " + ");
        if (c < 0) c = -c;
      }
      first = false;
      const bool has_t = t.exp != 0;
      if (!has_t) {
        os << rat_str(c);
      } else {
        if (c != 1) os << rat_str(c);
        os << "t";
        if (t.exp != 1) {
          if (is_integer(t.exp) && t.exp > 0)
            os << "^" << rat_str(t.exp);
          else
            os << "^(" << rat_str(t.exp) << ")";
        }
      }
    }
    return os.str();
  }

 private:
  void normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const PuiseuxTerm& a, const PuiseuxTerm& b) {
                return a.exp < b.exp;
              });
    std::vector<PuiseuxTerm> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().exp == t.exp)
        out.back().coeff += t.coeff;
      else
        out.push_back(t);
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
    }
    terms_ = std::move(out);
  }

  std::vector<PuiseuxTerm> terms_;
};

/// Valuation with +infinity for zero, as an optional.
inline std::optional<Rat> ps_val(const PuiseuxScalar& a) {
  return a.valuation();
}

}  // namespace trop
