#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "trop/divisor.hpp"
#include "trop/errors.hpp"
#include "trop/metric_graph.hpp"
#include "trop/pl_func.hpp"

namespace trop {

namespace detail {

/// Reduced row echelon form of [A | b]; returns false on inconsistency.
/// `pivot_col[r]` records the pivot column of row r.
inline bool rref(std::vector<std::vector<Rat>>& a, std::vector<Rat>& b,
                 std::vector<int>& pivot_col) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  pivot_col.clear();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    std::swap(b[piv], b[r]);
    Rat inv = a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] /= inv;
    b[r] /= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) return false;
  a.resize(r);
  b.resize(r);
  return true;
}

/// Searches integer assignments of the free variables of a solved system,
/// smallest absolute value first, for a fully integral solution within the
/// slope bound. Deterministic; returns the first hit.
inline std::optional<std::vector<long>> integer_solution(
    const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
    const std::vector<int>& pivot_col, std::size_t nvars, long bound) {
  std::vector<bool> is_pivot(nvars, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<int> free_vars;
  for (std::size_t v = 0; v < nvars; ++v)
    if (!is_pivot[v]) free_vars.push_back(static_cast<int>(v));

  std::vector<long> order{0};
  for (long v = 1; v <= bound; ++v) {
    order.push_back(v);
    order.push_back(-v);
  }

  std::vector<long> assignment(free_vars.size(), 0);
  std::vector<long> result(nvars, 0);
  auto evaluate = [&]() -> bool {
    for (std::size_t i = 0; i < free_vars.size(); ++i)
      result[free_vars[i]] = assignment[i];
    for (std::size_t r = 0; r < a.size(); ++r) {
      Rat v = b[r];
      for (std::size_t i = 0; i < free_vars.size(); ++i)
        v -= a[r][free_vars[i]] * Rat(assignment[i]);
      if (!is_integer(v)) return false;
      long vi = to_long(v);
      if (vi < -bound || vi > bound) return false;
      result[pivot_col[r]] = vi;
    }
    return true;
  };

  // Depth-first over free slopes in increasing absolute value.
  std::optional<std::vector<long>> found;
  auto dfs = [&](auto&& self, std::size_t k) -> bool {
    if (k == free_vars.size()) {
      if (evaluate()) {
        found = result;
        return true;
      }
      return false;
    }
    for (long v : order) {
      assignment[k] = v;
      if (self(self, k + 1)) return true;
    }
    return false;
  };
  dfs(dfs, 0);
  return found;
}

struct SplitTracker {
  MetricGraph g;
  std::vector<int> arc_orig;
  std::vector<Rat> arc_off;

  explicit SplitTracker(const MetricGraph& gamma) : g(gamma) {
    arc_orig.resize(g.arcs.size());
    arc_off.resize(g.arcs.size(), Rat(0));
    for (std::size_t i = 0; i < arc_orig.size(); ++i)
      arc_orig[i] = static_cast<int>(i);
  }

  int split(int arc, const Rat& pos) {
    int node = g.split_arc(arc, pos);
    arc_orig.push_back(arc_orig[arc]);
    arc_off.push_back(arc_off[arc] + pos);
    return node;
  }
};

}  // namespace detail

/// Decides linear equivalence of D and E supported in the marked
/// subcomplex S and produces the witness: a piecewise-linear h with
/// (h) = D - E, h = 0 outside S and at every attachment node, and integer
/// slopes bounded by deg+(D) + deg+(E). Returns nullopt when no such
/// function exists. `extra_bound` widens the slope bound (regression knob).
inline std::optional<PLFunc> find_certificate(const MetricGraph& gamma,
                                              const Divisor& D,
                                              const Divisor& E,
                                              long extra_bound = 0) {
  Divisor delta = D - E;
  if (delta.empty()) return PLFunc::zero(gamma);

  detail::SplitTracker st(gamma);
  MetricGraph& g = st.g;

  // Place finite support points onto nodes, splitting arcs as needed.
  for (const auto& [key, mult] : delta.coeffs()) {
    if (key.kind != DivKey::Kind::finite) continue;
    GraphLoc loc = g.locate(key.pt);
    switch (loc.kind) {
      case GraphLoc::Kind::node:
        if (!g.nodes[loc.node].in_s)
          throw SupportOutsideS("divisor point " + key.pt.to_string() +
                                " lies outside the marked subcomplex");
        break;
      case GraphLoc::Kind::arc_interior:
        if (!g.arcs[loc.arc].in_s)
          throw SupportOutsideS("divisor point " + key.pt.to_string() +
                                " lies outside the marked subcomplex");
        st.split(loc.arc, loc.pos);
        break;
      default:
        throw SupportOutsideS("divisor point " + key.pt.to_string() +
                              " does not lie on the graph");
    }
  }

  // Ray-end support: the unique infinite arc on that line.
  std::map<int, long> tail_coeff;
  for (const auto& [key, mult] : delta.coeffs()) {
    if (key.kind != DivKey::Kind::ray_end) continue;
    int arc = g.locate_ray_end(key);
    if (arc < 0 || !g.arcs[arc].in_s)
      throw SupportOutsideS("ray-end divisor point " + key.to_string() +
                            " lies outside the marked subcomplex");
    tail_coeff[arc] = mult;
  }

  std::vector<long> delta_node(g.nodes.size(), 0);
  for (const auto& [key, mult] : delta.coeffs()) {
    if (key.kind != DivKey::Kind::finite) continue;
    int n = g.node_at(key.pt);
    delta_node[n] = mult;
  }

  // One slope unknown per S-arc.
  std::vector<int> var_of(g.arcs.size(), -1);
  int nvars = 0;
  for (std::size_t i = 0; i < g.arcs.size(); ++i)
    if (g.arcs[i].in_s) var_of[i] = nvars++;

  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> rhs;
  auto new_row = [&]() -> std::vector<Rat>& {
    rows.emplace_back(nvars, Rat(0));
    rhs.emplace_back(0);
    return rows.back();
  };

  // Divisor equation at every node: sum of outgoing slopes = -delta.
  for (std::size_t n = 0; n < g.nodes.size(); ++n) {
    auto& row = new_row();
    for (std::size_t i = 0; i < g.arcs.size(); ++i) {
      if (var_of[i] < 0) continue;
      if (g.arcs[i].a == static_cast<int>(n)) row[var_of[i]] += 1;
      if (!g.arcs[i].infinite && g.arcs[i].b == static_cast<int>(n))
        row[var_of[i]] -= 1;
    }
    rhs.back() = Rat(-delta_node[n]);
  }

  // Ray tails carry exactly the prescribed end coefficient.
  for (std::size_t i = 0; i < g.arcs.size(); ++i) {
    if (!g.arcs[i].infinite || var_of[i] < 0) continue;
    auto& row = new_row();
    row[var_of[i]] = 1;
    auto it = tail_coeff.find(static_cast<int>(i));
    rhs.back() = Rat(it == tail_coeff.end() ? 0 : it->second);
  }

  // Spanning forest of the finite S-arcs for cycle and attachment-value
  // consistency (sum of slope * length vanishes along closed walks and
  // between attachment nodes).
  const int nn = static_cast<int>(g.nodes.size());
  std::vector<int> parent_node(nn, -1), parent_arc(nn, -1), comp(nn, -1);
  std::vector<std::vector<std::pair<int, int>>> adj(nn);  // (arc, other node)
  for (std::size_t i = 0; i < g.arcs.size(); ++i) {
    const GraphArc& e = g.arcs[i];
    if (!e.in_s || e.infinite) continue;
    adj[e.a].push_back({static_cast<int>(i), e.b});
    adj[e.b].push_back({static_cast<int>(i), e.a});
  }
  std::vector<int> tree_arcs;
  std::vector<int> cycle_arcs;
  int ncomp = 0;
  for (int root = 0; root < nn; ++root) {
    if (comp[root] >= 0 || adj[root].empty()) continue;
    comp[root] = ncomp;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& [arc, w] : adj[v]) {
        if (comp[w] < 0) {
          comp[w] = ncomp;
          parent_node[w] = v;
          parent_arc[w] = arc;
          tree_arcs.push_back(arc);
          stack.push_back(w);
        }
      }
    }
    ++ncomp;
  }
  std::vector<bool> in_tree(g.arcs.size(), false);
  for (int a : tree_arcs) in_tree[a] = true;
  for (std::size_t i = 0; i < g.arcs.size(); ++i)
    if (g.arcs[i].in_s && !g.arcs[i].infinite && !in_tree[i])
      cycle_arcs.push_back(static_cast<int>(i));

  // Value difference from the component root to a node, as a linear form.
  auto add_path_from_root = [&](int node, std::vector<Rat>& row, Rat sign) {
    int v = node;
    while (parent_node[v] >= 0) {
      int arc = parent_arc[v];
      const GraphArc& e = g.arcs[arc];
      Rat s = e.b == v ? Rat(1) : Rat(-1);
      row[var_of[arc]] += sign * s * e.len;
      v = parent_node[v];
    }
  };

  for (int arc : cycle_arcs) {
    const GraphArc& e = g.arcs[arc];
    auto& row = new_row();
    add_path_from_root(e.b, row, Rat(1));
    add_path_from_root(e.a, row, Rat(-1));
    row[var_of[arc]] -= e.len;
  }

  std::vector<std::vector<int>> comp_attachments(ncomp);
  for (int n = 0; n < nn; ++n)
    if (comp[n] >= 0 && g.nodes[n].attachment)
      comp_attachments[comp[n]].push_back(n);
  for (const auto& atts : comp_attachments)
    for (std::size_t k = 1; k < atts.size(); ++k) {
      auto& row = new_row();
      add_path_from_root(atts[k], row, Rat(1));
      add_path_from_root(atts[0], row, Rat(-1));
    }

  std::vector<int> pivot_col;
  if (!detail::rref(rows, rhs, pivot_col)) return std::nullopt;

  long bound = D.positive_degree() + E.positive_degree() + extra_bound;
  if (bound < 1) bound = 1;
  auto solution =
      detail::integer_solution(rows, rhs, pivot_col, nvars, bound);
  if (!solution) return std::nullopt;

  // Node values: integrate from attachment roots (value 0) per component.
  std::vector<Rat> value(g.nodes.size(), Rat(0));
  std::vector<bool> valued(g.nodes.size(), false);
  auto slope_of = [&](int arc) {
    return var_of[arc] >= 0 ? (*solution)[var_of[arc]] : 0L;
  };
  for (int c = 0; c < ncomp; ++c) {
    int root = -1;
    if (!comp_attachments[c].empty()) root = comp_attachments[c][0];
    if (root < 0)
      for (int n = 0; n < nn && root < 0; ++n)
        if (comp[n] == c) root = n;
    value[root] = Rat(0);
    valued[root] = true;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& [arc, w] : adj[v]) {
        if (valued[w]) continue;
        const GraphArc& e = g.arcs[arc];
        Rat step = Rat(slope_of(arc)) * e.len;
        value[w] = e.b == w ? Rat(value[v] + step) : Rat(value[v] - step);
        valued[w] = true;
        stack.push_back(w);
      }
    }
  }

  // Assemble onto the original arcs; splits become breakpoints.
  PLFunc h = PLFunc::zero(gamma);
  for (std::size_t n = 0; n < gamma.nodes.size(); ++n)
    h.node_values[n] = value[n];
  std::vector<std::vector<std::pair<Rat, long>>> pieces(gamma.arcs.size());
  for (std::size_t i = 0; i < g.arcs.size(); ++i)
    pieces[st.arc_orig[i]].push_back({st.arc_off[i], slope_of(static_cast<int>(i))});
  for (std::size_t i = 0; i < gamma.arcs.size(); ++i) {
    auto& ps = pieces[i];
    std::sort(ps.begin(), ps.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    ArcFunc f;
    f.slopes.clear();
    for (std::size_t k = 0; k < ps.size(); ++k) {
      if (k > 0) f.breaks.push_back(ps[k].first);
      f.slopes.push_back(ps[k].second);
    }
    h.arcs[i] = std::move(f);
  }
  return h;
}

}  // namespace trop
