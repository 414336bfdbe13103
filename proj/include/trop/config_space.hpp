#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "trop/certificate.hpp"
#include "trop/divisor.hpp"
#include "trop/errors.hpp"
#include "trop/metric_graph.hpp"
#include "trop/polytope.hpp"

namespace trop {

/// One maximal cell of the space of zero configurations linearly
/// equivalent to E: a combinatorial slope pattern over the arcs of S with
/// the zero positions as free parameters, and the feasibility polytope of
/// those positions (variables ordered per `vars`).
struct ConfigCell {
  struct ArcPattern {
    int arc;
    long zeros;
    long tail_slope;  // slope at the arc tail, before any zero
  };
  std::vector<ArcPattern> pattern;
  std::vector<std::pair<int, long>> vars;  // (arc, index among its zeros)
  Polytope poly;
  int dim = 0;
  Divisor pinned;  // forced zeros on isolated S nodes
};

namespace detail {

struct ConfigContext {
  const MetricGraph* g;
  std::vector<int> s_arcs;            // S arcs in id order
  std::vector<long> e_node;           // E coefficient per node
  std::vector<int> comp;              // node component among S arcs, -1 none
  int ncomp = 0;
  std::vector<std::vector<int>> comp_attachments;
};

/// Slopes at arc tails for a given zero-count pattern, or nullopt when the
/// pole data cannot be matched. Unique on forests.
inline std::optional<std::vector<long>> pattern_slopes(
    const ConfigContext& ctx, const std::vector<long>& counts, long bound) {
  const MetricGraph& g = *ctx.g;
  const std::size_t m = ctx.s_arcs.size();
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> rhs;
  for (std::size_t n = 0; n < g.nodes.size(); ++n) {
    bool touched = g.nodes[n].in_s;
    std::vector<Rat> row(m, Rat(0));
    Rat r(ctx.e_node[n]);
    for (std::size_t i = 0; i < m; ++i) {
      const GraphArc& e = g.arcs[ctx.s_arcs[i]];
      if (e.a == static_cast<int>(n)) row[i] += 1;
      if (!e.infinite && e.b == static_cast<int>(n)) {
        row[i] -= 1;
        r -= Rat(counts[i]);
      }
    }
    if (!touched) continue;
    rows.push_back(std::move(row));
    rhs.push_back(r);
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!g.arcs[ctx.s_arcs[i]].infinite) continue;
    std::vector<Rat> row(m, Rat(0));
    row[i] = 1;
    rows.push_back(std::move(row));
    rhs.push_back(Rat(counts[i]));  // tail slope ends at zero past the last zero
  }
  std::vector<int> pivots;
  if (!rref(rows, rhs, pivots)) return std::nullopt;
  if (pivots.size() != m) return std::nullopt;  // underdetermined: not a forest
  std::vector<long> slopes(m, 0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!is_integer(rhs[r])) return std::nullopt;
    long v = to_long(rhs[r]);
    if (v < -bound || v > bound) return std::nullopt;
    slopes[pivots[r]] = v;
  }
  return slopes;
}

inline Rat node_value_form(const ConfigContext& ctx,
                           const std::vector<long>& counts,
                           const std::vector<long>& slopes,
                           const std::vector<std::vector<int>>& var_of_arc,
                           int target, std::vector<Rat>& coeffs,
                           const std::vector<int>& parent_node,
                           const std::vector<int>& parent_arc) {
  // Affine form of h(target) - h(root): constant part returned, coefficients
  // of the position variables accumulated into `coeffs`.
  const MetricGraph& g = *ctx.g;
  Rat constant(0);
  int v = target;
  while (parent_node[v] >= 0) {
    int arc = parent_arc[v];
    const GraphArc& e = g.arcs[arc];
    Rat sign = e.b == v ? Rat(1) : Rat(-1);
    std::size_t ai = 0;
    while (ctx.s_arcs[ai] != arc) ++ai;
    // Value change a->b: t*len - sum_i (len - q_i).
    constant += sign * (Rat(slopes[ai]) * e.len - Rat(counts[ai]) * e.len);
    for (int var : var_of_arc[ai]) coeffs[var] += sign;
    v = parent_node[v];
  }
  return constant;
}

}  // namespace detail

/// Enumerates the maximal cells of the polyhedral space of effective zero
/// configurations D with find_certificate(Gamma, D, E) solvable: each cell
/// fixes how many zeros sit on each arc of S (with the induced integer
/// slopes) and carries the polytope of admissible positions. S must be a
/// forest; cells whose every configuration degenerates into another cell's
/// closure are filtered out.
inline std::vector<ConfigCell> configuration_space(const MetricGraph& gamma,
                                                   const Divisor& E) {
  if (!E.is_effective())
    throw std::invalid_argument("pole divisor must be effective");

  // Subdivide at interior support points so E lives on nodes.
  detail::SplitTracker st(gamma);
  MetricGraph& g = st.g;
  for (const auto& [key, mult] : E.coeffs()) {
    if (key.kind != DivKey::Kind::finite)
      throw SupportOutsideS("pole divisor with a ray-end point");
    GraphLoc loc = g.locate(key.pt);
    if (loc.kind == GraphLoc::Kind::node) {
      if (!g.nodes[loc.node].in_s)
        throw SupportOutsideS("pole point outside the marked subcomplex");
    } else if (loc.kind == GraphLoc::Kind::arc_interior) {
      if (!g.arcs[loc.arc].in_s)
        throw SupportOutsideS("pole point outside the marked subcomplex");
      st.split(loc.arc, loc.pos);
    } else {
      throw SupportOutsideS("pole point not on the graph");
    }
  }

  detail::ConfigContext ctx;
  ctx.g = &g;
  for (std::size_t i = 0; i < g.arcs.size(); ++i)
    if (g.arcs[i].in_s) ctx.s_arcs.push_back(static_cast<int>(i));
  ctx.e_node.assign(g.nodes.size(), 0);
  for (const auto& [key, mult] : E.coeffs())
    ctx.e_node[g.node_at(key.pt)] = mult;

  // Components over finite S arcs; cycle detection.
  const int nn = static_cast<int>(g.nodes.size());
  std::vector<std::vector<std::pair<int, int>>> adj(nn);
  long finite_s_arcs = 0;
  for (int arc : ctx.s_arcs) {
    const GraphArc& e = g.arcs[arc];
    if (e.infinite) continue;
    adj[e.a].push_back({arc, e.b});
    adj[e.b].push_back({arc, e.a});
    ++finite_s_arcs;
  }
  ctx.comp.assign(nn, -1);
  std::vector<int> parent_node(nn, -1), parent_arc(nn, -1);
  long tree_arcs = 0;
  for (int root = 0; root < nn; ++root) {
    if (ctx.comp[root] >= 0 || adj[root].empty()) continue;
    ctx.comp[root] = ctx.ncomp;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& [arc, w] : adj[v]) {
        if (ctx.comp[w] >= 0) continue;
        ctx.comp[w] = ctx.ncomp;
        parent_node[w] = v;
        parent_arc[w] = arc;
        ++tree_arcs;
        stack.push_back(w);
      }
    }
    ++ctx.ncomp;
  }
  if (tree_arcs != finite_s_arcs)
    throw CyclicSubcomplexUnsupported(
        "configuration enumeration requires an acyclic marked subcomplex");
  ctx.comp_attachments.assign(ctx.ncomp, {});
  for (int n = 0; n < nn; ++n)
    if (ctx.comp[n] >= 0 && g.nodes[n].attachment)
      ctx.comp_attachments[ctx.comp[n]].push_back(n);

  // Isolated S nodes force their pole mass to cancel in place.
  Divisor pinned;
  long movable = 0;
  for (int n = 0; n < nn; ++n) {
    if (!g.nodes[n].in_s) continue;
    bool has_arc = !adj[n].empty();
    if (!has_arc) {
      for (int arc : ctx.s_arcs)
        if (g.arcs[arc].infinite && g.arcs[arc].a == n) has_arc = true;
    }
    if (!has_arc && ctx.e_node[n] > 0)
      pinned.add_point(g.nodes[n].pos, ctx.e_node[n]);
  }
  movable = E.degree() - pinned.degree();

  const long bound = 2 * E.degree() + 1;
  const std::size_t m = ctx.s_arcs.size();
  std::vector<ConfigCell> cells;

  std::vector<long> counts(m, 0);
  auto emit = [&]() {
    // Isolated-node poles were excluded from `counts`; zero their rows by
    // treating them as already-canceled (their node equation reads 0 = 0).
    std::vector<long> e_save = ctx.e_node;
    for (const auto& [k, mult] : pinned.coeffs())
      ctx.e_node[g.node_at(k.pt)] = 0;
    auto slopes = detail::pattern_slopes(ctx, counts, bound);
    ctx.e_node = e_save;
    if (!slopes) return;

    ConfigCell cell;
    cell.pinned = pinned;
    std::vector<std::vector<int>> var_of_arc(m);
    for (std::size_t i = 0; i < m; ++i) {
      for (long z = 0; z < counts[i]; ++z) {
        var_of_arc[i].push_back(static_cast<int>(cell.vars.size()));
        cell.vars.push_back({ctx.s_arcs[i], z});
      }
      cell.pattern.push_back({ctx.s_arcs[i], counts[i], (*slopes)[i]});
    }
    Polytope poly = Polytope::in_vars(static_cast<int>(cell.vars.size()));
    for (std::size_t i = 0; i < m; ++i) {
      const GraphArc& e = g.arcs[ctx.s_arcs[i]];
      const auto& vs = var_of_arc[i];
      for (std::size_t z = 0; z < vs.size(); ++z) {
        std::vector<Rat> row(poly.n, Rat(0));
        if (z == 0) {
          row[vs[0]] = -1;  // q_1 >= 0
          poly.add(row, Rat(0));
        } else {
          row[vs[z - 1]] = 1;
          row[vs[z]] = -1;  // q_{z-1} <= q_z
          poly.add(row, Rat(0));
        }
      }
      if (!vs.empty() && !e.infinite) {
        std::vector<Rat> row(poly.n, Rat(0));
        row[vs.back()] = 1;  // q_k <= len
        poly.add(row, e.len);
      }
    }
    // Attachment nodes share the value 0.
    for (int c = 0; c < ctx.ncomp; ++c) {
      const auto& atts = ctx.comp_attachments[c];
      for (std::size_t k = 1; k < atts.size(); ++k) {
        std::vector<Rat> coeffs(poly.n, Rat(0));
        Rat c0 = detail::node_value_form(ctx, counts, *slopes, var_of_arc,
                                         atts[k], coeffs, parent_node,
                                         parent_arc);
        std::vector<Rat> coeffs0(poly.n, Rat(0));
        Rat c1 = detail::node_value_form(ctx, counts, *slopes, var_of_arc,
                                         atts[0], coeffs0, parent_node,
                                         parent_arc);
        for (int v = 0; v < poly.n; ++v) coeffs[v] -= coeffs0[v];
        poly.add(coeffs, c1 - c0, LinCon::Rel::eq);
      }
    }
    int dim = dimension(poly);
    if (dim < 0) return;
    cell.poly = std::move(poly);
    cell.dim = dim;
    cells.push_back(std::move(cell));
  };

  // All distributions of the movable zeros over the S arcs.
  auto enumerate = [&](auto&& self, std::size_t i, long remaining) -> void {
    if (i + 1 == m || m == 0) {
      if (m > 0) counts[i] = remaining;
      emit();
      return;
    }
    for (long z = 0; z <= remaining; ++z) {
      counts[i] = z;
      self(self, i + 1, remaining - z);
    }
  };
  if (m == 0) {
    if (movable == 0 && pinned.degree() > 0) {
      ConfigCell cell;
      cell.pinned = pinned;
      cell.poly = Polytope::in_vars(0);
      cell.dim = 0;
      cells.push_back(std::move(cell));
    }
    return cells;
  }
  enumerate(enumerate, 0, movable);

  // Maximality: drop cells whose generic configuration already lies in the
  // closure of another cell (zeros pinned at nodes redistribute into it).
  auto counts_of = [&](const ConfigCell& cell) {
    std::vector<long> k(m, 0);
    for (std::size_t i = 0; i < m; ++i) k[i] = cell.pattern[i].zeros;
    return k;
  };
  auto in_closure_of = [&](const ConfigCell& a, const ConfigCell& b) {
    auto sample = relint_point(a.poly);
    if (!sample) return false;
    std::vector<long> interior(m, 0);
    std::map<int, long> node_mass;
    for (std::size_t v = 0; v < a.vars.size(); ++v) {
      auto [arc, idx] = a.vars[v];
      std::size_t ai = 0;
      while (ctx.s_arcs[ai] != arc) ++ai;
      const GraphArc& e = g.arcs[arc];
      Rat q = (*sample)[v];
      if (q == 0)
        node_mass[e.a] += 1;
      else if (!e.infinite && q == e.len)
        node_mass[e.b] += 1;
      else
        interior[ai] += 1;
    }
    std::vector<long> kb = counts_of(b);
    std::vector<long> deficit(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (interior[i] > kb[i]) return false;
      deficit[i] = kb[i] - interior[i];
    }
    // Distribute node masses into incident-arc deficits (tiny search).
    std::vector<std::pair<int, long>> masses(node_mass.begin(), node_mass.end());
    auto place = [&](auto&& self, std::size_t mi) -> bool {
      if (mi == masses.size()) {
        for (std::size_t i = 0; i < m; ++i)
          if (deficit[i] != 0) return false;
        return true;
      }
      auto [node, mass] = masses[mi];
      std::vector<std::size_t> incident;
      for (std::size_t i = 0; i < m; ++i) {
        const GraphArc& e = g.arcs[ctx.s_arcs[i]];
        if (e.a == node || (!e.infinite && e.b == node)) incident.push_back(i);
      }
      auto distribute = [&](auto&& dself, std::size_t ii, long rem) -> bool {
        if (ii == incident.size()) return rem == 0 && self(self, mi + 1);
        for (long take = std::min(rem, deficit[incident[ii]]); take >= 0;
             --take) {
          deficit[incident[ii]] -= take;
          if (dself(dself, ii + 1, rem - take)) return true;
          deficit[incident[ii]] += take;
        }
        return false;
      };
      return distribute(distribute, 0, mass);
    };
    return place(place, 0);
  };

  std::vector<ConfigCell> maximal;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < cells.size() && !dominated; ++j) {
      if (i == j) continue;
      if (counts_of(cells[i]) == counts_of(cells[j])) continue;
      if (cells[j].dim >= cells[i].dim && in_closure_of(cells[i], cells[j]))
        dominated = true;
    }
    if (!dominated) maximal.push_back(cells[i]);
  }
  return maximal;
}

/// The zero divisor of a cell instantiated at given positions. `E` must be
/// the pole divisor the cell was enumerated for (it pins the subdivision).
inline Divisor cell_configuration(const MetricGraph& gamma, const Divisor& E,
                                  const ConfigCell& cell,
                                  const std::vector<Rat>& params) {
  detail::SplitTracker st(gamma);
  MetricGraph& g = st.g;
  for (const auto& [key, mult] : E.coeffs()) {
    if (key.kind != DivKey::Kind::finite) continue;
    GraphLoc loc = g.locate(key.pt);
    if (loc.kind == GraphLoc::Kind::arc_interior) st.split(loc.arc, loc.pos);
  }
  Divisor d = cell.pinned;
  for (std::size_t v = 0; v < cell.vars.size(); ++v)
    d.add_point(g.arc_point(cell.vars[v].first, params[v]), 1);
  return d;
}

/// Dimension of the common face of two cells: the locus of configurations
/// in both closures. -1 when the closures are disjoint.
inline int shared_face_dimension(const MetricGraph& gamma,
                                 const ConfigCell& a, const ConfigCell& b,
                                 const Divisor& E) {
  // Configurations of `a` that redistribute into `b`: pin enough zeros of
  // `a` to nodes so that per-arc counts match `b` after moving node mass.
  detail::SplitTracker st(gamma);
  MetricGraph& g = st.g;
  for (const auto& [key, mult] : E.coeffs()) {
    GraphLoc loc = g.locate(key.pt);
    if (loc.kind == GraphLoc::Kind::arc_interior) st.split(loc.arc, loc.pos);
  }

  std::map<int, long> ka, kb;
  for (const auto& p : a.pattern) ka[p.arc] = p.zeros;
  for (const auto& p : b.pattern) kb[p.arc] = p.zeros;
  std::vector<int> arcs;
  for (const auto& [arc, z] : ka) arcs.push_back(arc);

  int best = -1;
  // Choices: per arc, how many zeros of `a` pin to tail and to head.
  std::vector<std::pair<long, long>> pin(arcs.size(), {0, 0});
  auto interior_ok = [&]() {
    std::map<int, long> node_mass;
    std::map<int, long> deficit;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      const GraphArc& e = g.arcs[arcs[i]];
      long int_cnt = ka[arcs[i]] - pin[i].first - pin[i].second;
      if (int_cnt < 0 || int_cnt > kb[arcs[i]]) return;
      deficit[arcs[i]] = kb[arcs[i]] - int_cnt;
      node_mass[e.a] += pin[i].first;
      if (!e.infinite) node_mass[e.b] += pin[i].second;
    }
    std::vector<std::pair<int, long>> masses;
    for (const auto& [n, z] : node_mass)
      if (z > 0) masses.push_back({n, z});
    auto place = [&](auto&& self, std::size_t mi) -> bool {
      if (mi == masses.size()) {
        for (const auto& [arc, d] : deficit)
          if (d != 0) return false;
        return true;
      }
      auto [node, mass] = masses[mi];
      std::vector<int> incident;
      for (int arc : arcs) {
        const GraphArc& e = g.arcs[arc];
        if (e.a == node || (!e.infinite && e.b == node)) incident.push_back(arc);
      }
      auto distribute = [&](auto&& dself, std::size_t ii, long rem) -> bool {
        if (ii == incident.size()) return rem == 0 && self(self, mi + 1);
        for (long take = std::min(rem, deficit[incident[ii]]); take >= 0;
             --take) {
          deficit[incident[ii]] -= take;
          if (dself(dself, ii + 1, rem - take)) return true;
          deficit[incident[ii]] += take;
        }
        return false;
      };
      return distribute(distribute, 0, mass);
    };
    if (!place(place, 0)) return;
    // Face polytope: a's polytope with the pinned positions fixed.
    Polytope face = a.poly;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      const GraphArc& e = g.arcs[arcs[i]];
      std::vector<int> vs;
      for (std::size_t v = 0; v < a.vars.size(); ++v)
        if (a.vars[v].first == arcs[i]) vs.push_back(static_cast<int>(v));
      for (long t = 0; t < pin[i].first; ++t) {
        std::vector<Rat> row(face.n, Rat(0));
        row[vs[t]] = 1;
        face.add(row, Rat(0), LinCon::Rel::eq);
      }
      for (long h = 0; h < pin[i].second; ++h) {
        std::vector<Rat> row(face.n, Rat(0));
        row[vs[vs.size() - 1 - h]] = 1;
        face.add(row, e.len, LinCon::Rel::eq);
      }
    }
    best = std::max(best, dimension(face));
  };
  auto choose = [&](auto&& self, std::size_t i) -> void {
    if (i == arcs.size()) {
      interior_ok();
      return;
    }
    long k = ka[arcs[i]];
    bool infinite = g.arcs[arcs[i]].infinite;
    for (long t = 0; t <= k; ++t)
      for (long h = 0; h + t <= k; ++h) {
        if (infinite && h > 0) continue;
        pin[i] = {t, h};
        self(self, i + 1);
      }
    pin[i] = {0, 0};
  };
  choose(choose, 0);
  return best;
}

}  // namespace trop
