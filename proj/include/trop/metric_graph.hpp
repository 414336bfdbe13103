#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "trop/divisor.hpp"
#include "trop/errors.hpp"
#include "trop/intersection.hpp"
#include "trop/trop_curve.hpp"

namespace trop {

struct GraphNode {
  Point2 pos;
  bool in_s = false;
  bool attachment = false;
};

/// Arc of a metric graph, oriented a -> b; ray arcs have b = -1 and run to
/// infinity. `len` is the lattice length (b - a = len * dir).
struct GraphArc {
  int a = -1;
  int b = -1;
  PrimitiveDir dir;
  Rat len;
  bool infinite = false;
  bool in_s = false;
};

/// Location of a point on a metric graph.
struct GraphLoc {
  enum class Kind { node, arc_interior, ray_end, missing };
  Kind kind = Kind::missing;
  int node = -1;
  int arc = -1;
  Rat pos;  // lattice-length offset from the arc tail
};

/// Embedded metric graph with a marked closed subcomplex S and the nodes
/// where S attaches to the rest of the graph.
struct MetricGraph {
  std::vector<GraphNode> nodes;
  std::vector<GraphArc> arcs;

  int node_at(const Point2& p) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i].pos == p) return static_cast<int>(i);
    return -1;
  }

  int add_node(const Point2& p, bool in_s = false) {
    int id = node_at(p);
    if (id >= 0) {
      nodes[id].in_s = nodes[id].in_s || in_s;
      return id;
    }
    nodes.push_back({p, in_s, false});
    return static_cast<int>(nodes.size()) - 1;
  }

  Point2 arc_point(int arc, const Rat& pos) const {
    const GraphArc& e = arcs[arc];
    return nodes[e.a].pos + pos * e.dir.as_point();
  }

  GraphLoc locate(const Point2& p) const {
    GraphLoc loc;
    int n = node_at(p);
    if (n >= 0) {
      loc.kind = GraphLoc::Kind::node;
      loc.node = n;
      return loc;
    }
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      const GraphArc& e = arcs[i];
      Point2 d = e.dir.as_point();
      Point2 delta = p - nodes[e.a].pos;
      if (cross(d, delta) != 0) continue;
      Rat t = dot(delta, d) / dot(d, d);
      if (t <= 0) continue;
      if (!e.infinite && t >= e.len) continue;
      loc.kind = GraphLoc::Kind::arc_interior;
      loc.arc = static_cast<int>(i);
      loc.pos = t;
      return loc;
    }
    return loc;
  }

  int locate_ray_end(const DivKey& key) const {
    if (key.kind != DivKey::Kind::ray_end) return -1;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      const GraphArc& e = arcs[i];
      if (!e.infinite) continue;
      if (DivKey::ray_end(nodes[e.a].pos, e.dir) == key)
        return static_cast<int>(i);
    }
    return -1;
  }

  /// Splits an arc at an interior position, preserving flags. The first
  /// half keeps the arc id; the tail becomes a new arc.
  int split_arc(int arc, const Rat& pos) {
    GraphArc& e = arcs[arc];
    Point2 mid = arc_point(arc, pos);
    int n = add_node(mid, e.in_s);
    GraphArc tail = e;
    tail.a = n;
    if (!e.infinite) tail.len = e.len - pos;
    e.b = n;
    e.infinite = false;
    e.len = pos;
    arcs.push_back(tail);
    return n;
  }

  void recompute_attachments() {
    for (auto& n : nodes) n.attachment = false;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (!nodes[i].in_s) continue;
      for (const auto& e : arcs) {
        bool incident = e.a == static_cast<int>(i) ||
                        (!e.infinite && e.b == static_cast<int>(i));
        if (incident && !e.in_s) {
          nodes[i].attachment = true;
          break;
        }
      }
    }
  }
};

/// Re-indexes an embedded tropical curve as a metric graph: arcs are the
/// curve edges subdivided at the 0-cells of the intersection complex, with
/// S the image of the complex and attachment nodes identified.
inline MetricGraph graph_of_curve(const TropCurve& c,
                                  const IntersectionComplex& ic) {
  std::vector<Cell1> cells = curve_cells(c);
  auto on_curve = [&](const Point2& p) {
    for (const auto& cell : cells)
      if (cell.contains(p)) return true;
    return false;
  };
  for (const auto& p : ic.points)
    if (!on_curve(p))
      throw CellNotOnCurve("intersection point " + p.to_string() +
                           " does not lie on the curve");
  for (const auto& s : ic.segments) {
    Point2 mid = make_rat(1, 2) * (s.a + s.b);
    if (!on_curve(s.a) || !on_curve(s.b) || !on_curve(mid))
      throw CellNotOnCurve("intersection segment leaves the curve");
  }
  for (const auto& r : ic.rays) {
    if (!on_curve(r.base) || !on_curve(r.base + r.dir.as_point()) ||
        !on_curve(r.base + Rat(2) * r.dir.as_point()))
      throw CellNotOnCurve("intersection ray leaves the curve");
  }

  MetricGraph g;
  // Interesting points: curve vertices and every 0-cell of the complex.
  std::vector<Point2> marks;
  for (const auto& v : c.vertices) marks.push_back(v);
  for (const auto& p : ic.points) marks.push_back(p);
  for (const auto& s : ic.segments) {
    marks.push_back(s.a);
    marks.push_back(s.b);
  }
  for (const auto& r : ic.rays) marks.push_back(r.base);
  std::sort(marks.begin(), marks.end());
  marks.erase(std::unique(marks.begin(), marks.end()), marks.end());
  for (const auto& p : marks) g.add_node(p);

  auto covered_1d = [&](const Point2& p) {
    for (const auto& s : ic.segments) {
      Point2 d = s.b - s.a, e = p - s.a;
      if (cross(d, e) == 0) {
        Rat t = dot(e, d) / dot(d, d);
        if (t >= 0 && t <= 1) return true;
      }
    }
    for (const auto& r : ic.rays) {
      Point2 e = p - r.base;
      if (cross(r.dir.as_point(), e) == 0 && dot(e, r.dir.as_point()) >= 0)
        return true;
    }
    return false;
  };

  for (const auto& cell : cells) {
    std::vector<Rat> params{Rat(0)};
    for (const auto& p : marks) {
      if (!cell.contains(p)) continue;
      Rat t = cell.param(p);
      if (t > 0 && (!cell.tmax || t < *cell.tmax)) params.push_back(t);
    }
    if (cell.tmax) params.push_back(*cell.tmax);
    std::sort(params.begin(), params.end());
    params.erase(std::unique(params.begin(), params.end()), params.end());

    Rat unit = lattice_length(cell.base, cell.base + cell.dir);
    for (std::size_t i = 0; i + 1 < params.size(); ++i) {
      Point2 pa = cell.at(params[i]), pb = cell.at(params[i + 1]);
      GraphArc arc;
      arc.a = g.add_node(pa);
      arc.b = g.add_node(pb);
      arc.dir = cell.pdir;
      arc.len = (params[i + 1] - params[i]) * unit;
      Point2 mid = make_rat(1, 2) * (pa + pb);
      arc.in_s = covered_1d(mid);
      g.arcs.push_back(arc);
    }
    if (!cell.tmax) {
      Point2 base = cell.at(params.back());
      GraphArc tail;
      tail.a = g.add_node(base);
      tail.b = -1;
      tail.dir = cell.pdir;
      tail.infinite = true;
      // The tail is in S exactly when the complex has a ray along it.
      tail.in_s = false;
      for (const auto& r : ic.rays)
        if (r.dir == cell.pdir && covered_1d(base) &&
            cross(r.dir.as_point(), base - r.base) == 0 &&
            dot(base - r.base, r.dir.as_point()) >= 0)
          tail.in_s = true;
      g.arcs.push_back(tail);
    }
  }

  // Node S-flags: isolated complex points plus endpoints of S-arcs.
  for (auto& n : g.nodes)
    if (ic.contains(n.pos)) n.in_s = true;
  g.recompute_attachments();
  return g;
}

}  // namespace trop
