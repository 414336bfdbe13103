#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "trop/geometry.hpp"

namespace trop {

/// A divisor point: a finite point of the plane, or the ideal end of a ray.
/// Ray ends are identified by the primitive direction plus the line
/// invariant cross(base, dir), so subdividing a ray does not change the key.
struct DivKey {
  enum class Kind { finite, ray_end };
  Kind kind = Kind::finite;
  Point2 pt;          // finite
  PrimitiveDir dir;   // ray_end
  Rat line_cross;     // ray_end: cross(p, dir) for any p on the line

  static DivKey finite(Point2 p) {
    DivKey k;
    k.kind = Kind::finite;
    k.pt = std::move(p);
    return k;
  }
  static DivKey ray_end(const Point2& base, PrimitiveDir d) {
    DivKey k;
    k.kind = Kind::ray_end;
    k.dir = d;
    k.line_cross = base.x * Rat(d.y) - base.y * Rat(d.x);
    return k;
  }

  friend bool operator==(const DivKey& a, const DivKey& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == Kind::finite) return a.pt == b.pt;
    return a.dir == b.dir && a.line_cross == b.line_cross;
  }
  friend bool operator<(const DivKey& a, const DivKey& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.kind == Kind::finite) return a.pt < b.pt;
    if (a.dir != b.dir) return a.dir < b.dir;
    return a.line_cross < b.line_cross;
  }

  std::string to_string() const {
    if (kind == Kind::finite) return pt.to_string();
    return "end" + dir.to_string() + "@" + rat_str(line_cross);
  }
};

/// Finite integer-weighted multiset of points on a metric graph; ray-end
/// points carry coefficients equal to the slope toward infinity.
class Divisor {
 public:
  Divisor() = default;

  void add(const DivKey& k, long mult) {
    if (mult == 0) return;
    auto it = coeffs_.find(k);
    if (it == coeffs_.end()) {
      coeffs_[k] = mult;
    } else {
      it->second += mult;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  void add_point(const Point2& p, long mult) { add(DivKey::finite(p), mult); }

  const std::map<DivKey, long>& coeffs() const { return coeffs_; }
  bool empty() const { return coeffs_.empty(); }

  long degree() const {
    long d = 0;
    for (const auto& [k, m] : coeffs_) d += m;
    return d;
  }
  long positive_degree() const {
    long d = 0;
    for (const auto& [k, m] : coeffs_)
      if (m > 0) d += m;
    return d;
  }
  bool is_effective() const {
    for (const auto& [k, m] : coeffs_)
      if (m < 0) return false;
    return true;
  }
  long at(const DivKey& k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? 0 : it->second;
  }

  std::vector<DivKey> support() const {
    std::vector<DivKey> s;
    for (const auto& [k, m] : coeffs_) s.push_back(k);
    return s;
  }

  friend Divisor operator+(const Divisor& a, const Divisor& b) {
    Divisor out = a;
    for (const auto& [k, m] : b.coeffs_) out.add(k, m);
    return out;
  }
  friend Divisor operator-(const Divisor& a, const Divisor& b) {
    Divisor out = a;
    for (const auto& [k, m] : b.coeffs_) out.add(k, -m);
    return out;
  }
  friend Divisor operator-(const Divisor& a) {
    Divisor out;
    for (const auto& [k, m] : a.coeffs_) out.add(k, -m);
    return out;
  }
  friend bool operator==(const Divisor& a, const Divisor& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Divisor& a, const Divisor& b) {
    return !(a == b);
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [k, m] : coeffs_) {
      if (!first) os << ", ";
      first = false;
      os << k.to_string() << ":" << m;
    }
    os << "}";
    return os.str();
  }

 private:
  std::map<DivKey, long> coeffs_;
};

}  // namespace trop
