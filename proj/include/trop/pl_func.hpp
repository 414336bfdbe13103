#pragma once

#include <stdexcept>
#include <vector>

#include "trop/divisor.hpp"
#include "trop/metric_graph.hpp"

namespace trop {

/// Restriction of a piecewise-linear function to one arc: breakpoint
/// positions (lattice-length offsets from the tail, strictly increasing,
/// interior) and one integer slope per piece.
struct ArcFunc {
  std::vector<Rat> breaks;
  std::vector<long> slopes{0};
};

/// Continuous piecewise-linear function with integer slopes on a metric
/// graph. Node values pin the function; continuity along every finite arc
/// is an invariant. On a ray arc the last slope persists to infinity.
struct PLFunc {
  std::vector<Rat> node_values;
  std::vector<ArcFunc> arcs;

  static PLFunc zero(const MetricGraph& g) {
    PLFunc h;
    h.node_values.assign(g.nodes.size(), Rat(0));
    h.arcs.assign(g.arcs.size(), ArcFunc{});
    return h;
  }

  bool is_zero() const {
    for (const auto& v : node_values)
      if (v != 0) return false;
    for (const auto& a : arcs)
      for (long s : a.slopes)
        if (s != 0) return false;
    return true;
  }
};

/// Checks sizes, breakpoint ordering, and continuity along finite arcs.
inline void validate(const PLFunc& h, const MetricGraph& g) {
  if (h.node_values.size() != g.nodes.size() || h.arcs.size() != g.arcs.size())
    throw std::invalid_argument("function shape does not match the graph");
  for (std::size_t i = 0; i < g.arcs.size(); ++i) {
    const GraphArc& e = g.arcs[i];
    const ArcFunc& f = h.arcs[i];
    if (f.slopes.size() != f.breaks.size() + 1)
      throw std::invalid_argument("slope count must be breaks + 1");
    Rat prev(0);
    for (const auto& b : f.breaks) {
      if (b <= prev) throw std::invalid_argument("breaks must increase from 0");
      if (!e.infinite && b >= e.len)
        throw std::invalid_argument("break beyond arc length");
      prev = b;
    }
    if (!e.infinite) {
      Rat v = h.node_values[e.a];
      Rat at = 0;
      for (std::size_t k = 0; k < f.slopes.size(); ++k) {
        Rat next = k < f.breaks.size() ? f.breaks[k] : e.len;
        v += Rat(f.slopes[k]) * (next - at);
        at = next;
      }
      if (v != h.node_values[e.b])
        throw std::invalid_argument("function is discontinuous along an arc");
    }
  }
}

inline Rat value_at(const PLFunc& h, const MetricGraph& g, int arc,
                    const Rat& pos) {
  const GraphArc& e = g.arcs[arc];
  const ArcFunc& f = h.arcs[arc];
  Rat v = h.node_values[e.a];
  Rat at = 0;
  for (std::size_t k = 0; k < f.slopes.size(); ++k) {
    Rat next = k < f.breaks.size() ? f.breaks[k] : pos;
    if (next > pos) next = pos;
    v += Rat(f.slopes[k]) * (next - at);
    at = next;
    if (at == pos) break;
  }
  return v;
}

/// Divisor of a piecewise-linear function: at each point, minus the sum of
/// outgoing slopes; a ray end carries the slope toward infinity, the unique
/// value making every component sum to degree zero.
inline Divisor divisor_of(const PLFunc& h, const MetricGraph& g) {
  validate(h, g);
  Divisor d;
  std::vector<long> outgoing(g.nodes.size(), 0);
  for (std::size_t i = 0; i < g.arcs.size(); ++i) {
    const GraphArc& e = g.arcs[i];
    const ArcFunc& f = h.arcs[i];
    outgoing[e.a] += f.slopes.front();
    if (!e.infinite) outgoing[e.b] -= f.slopes.back();
    for (std::size_t k = 0; k < f.breaks.size(); ++k) {
      long ord = f.slopes[k] - f.slopes[k + 1];
      if (ord != 0)
        d.add_point(g.arc_point(static_cast<int>(i), f.breaks[k]), ord);
    }
    if (e.infinite && f.slopes.back() != 0)
      d.add(DivKey::ray_end(g.nodes[e.a].pos, e.dir), f.slopes.back());
  }
  for (std::size_t n = 0; n < g.nodes.size(); ++n)
    if (outgoing[n] != 0) d.add_point(g.nodes[n].pos, -outgoing[n]);
  return d;
}

}  // namespace trop
