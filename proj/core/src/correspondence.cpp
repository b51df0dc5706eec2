#include "orbigraph/correspondence.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <map>

namespace orbigraph {

vertex_crossed_product_result vertex_crossed_product(const graph_action& a) {
  vertex_crossed_product_result res;
  res.ag = action_groupoid(a.vertex_action());
  res.alg = groupoid_algebra(res.ag.gpd);
  return res;
}

correspondence_crossed_product_result correspondence_crossed_product(const graph_action& a) {
  correspondence_crossed_product_result res;
  res.coeff = vertex_crossed_product(a);
  const finite_groupoid& g = a.gpd;
  const directed_graph& e = a.graph;
  fd_correspondence& m = res.mod;

  std::vector<std::vector<Id>> mod_id(g.n_arrows(), std::vector<Id>(e.n_edges(), undef));
  for (Id ga = 0; ga < g.n_arrows(); ++ga)
    for (Id ed = 0; ed < e.n_edges(); ++ed)
      if (a.edge_anchor(ed) == g.rng[ga]) {
        mod_id[ga][ed] = static_cast<Id>(m.basis.size());
        m.basis.emplace_back(ga, ed);
      }
  m.dim = static_cast<Id>(m.basis.size());

  const Id adim = res.coeff.alg.dim;
  m.left.assign(adim, std::vector<Id>(m.dim, undef));
  m.right.assign(m.dim, std::vector<Id>(adim, undef));
  m.inner.assign(m.dim, std::vector<Id>(m.dim, undef));

  for (Id ai = 0; ai < adim; ++ai) {
    const auto [gam, x] = res.coeff.ag.pairs[ai];
    for (Id mi = 0; mi < m.dim; ++mi) {
      const auto [ga, ed] = m.basis[mi];
      // (gam, x) . (ga, ed) = (gam ga, gam . ed) when src(gam) = rng(ga)
      // and x = rng(ed).
      if (g.src[gam] != g.rng[ga] || x != e.erng[ed]) continue;
      const Id gg = g.compose(gam, ga);
      const Id ge = a.edge_act[gam][ed];
      if (gg == undef || ge == undef)
        throw internal_consistency_error("correspondence: left action transport undefined");
      m.left[ai][mi] = mod_id[gg][ge];
    }
  }

  for (Id mi = 0; mi < m.dim; ++mi) {
    const auto [ga, ed] = m.basis[mi];
    for (Id ai = 0; ai < adim; ++ai) {
      const auto [gam, x] = res.coeff.ag.pairs[ai];
      // (ga, ed) . (gam, x) = (ga gam, ed) when src(ga) = rng(gam) and
      // src(ed) = (ga gam) . x.
      if (g.src[ga] != g.rng[gam]) continue;
      const Id gg = g.compose(ga, gam);
      if (gg == undef) throw internal_consistency_error("correspondence: right action compose failed");
      if (a.vertex_act[gg][x] != e.esrc[ed]) continue;
      m.right[mi][ai] = mod_id[gg][ed];
    }
  }

  for (Id m1 = 0; m1 < m.dim; ++m1) {
    const auto [g1, e1] = m.basis[m1];
    for (Id m2 = 0; m2 < m.dim; ++m2) {
      const auto [g2, e2] = m.basis[m2];
      // <(g1, e), (g2, e)> = (g1^-1 g2, g2^-1 . src(e)).
      if (e1 != e2) continue;
      const Id q = g.compose(g.inv[g1], g2);
      const Id y = a.vertex_act[g.inv[g2]][e.esrc[e1]];
      if (q == undef || y == undef)
        throw internal_consistency_error("correspondence: inner product transport undefined");
      m.inner[m1][m2] = res.coeff.ag.pair_id[q][y];
    }
  }
  return res;
}

validation_report verify_correspondence(const correspondence_crossed_product_result& c) {
  validation_report rep;
  const fd_star_algebra& alg = c.coeff.alg;
  const fd_correspondence& m = c.mod;
  const std::size_t cap = 64;
  const Id adim = alg.dim;

  auto left_of = [&](Id a, Id x) { return (a == undef || x == undef) ? undef : m.left[a][x]; };
  auto right_of = [&](Id x, Id a) { return (a == undef || x == undef) ? undef : m.right[x][a]; };

  for (Id a = 0; a < adim && rep.violations.size() < cap; ++a)
    for (Id b = 0; b < adim; ++b) {
      const Id ab = alg.prod_at(a, b);
      for (Id x = 0; x < m.dim; ++x) {
        if (left_of(ab, x) != left_of(a, left_of(b, x))) {
          rep.add("left-action", {a, b, x}, "(ab).x != a.(b.x)");
          break;
        }
        if (right_of(right_of(x, a), b) != right_of(x, ab)) {
          rep.add("right-action", {x, a, b}, "(x.a).b != x.(ab)");
          break;
        }
      }
    }

  for (Id a = 0; a < adim && rep.violations.size() < cap; ++a)
    for (Id x = 0; x < m.dim; ++x)
      for (Id b = 0; b < adim; ++b)
        if (right_of(left_of(a, x), b) != left_of(a, right_of(x, b))) {
          rep.add("actions-commute", {a, x, b}, "(a.x).b != a.(x.b)");
          break;
        }

  // The unit acts as identity on both sides.
  for (Id x = 0; x < m.dim && rep.violations.size() < cap; ++x) {
    Id hit_l = 0, hit_r = 0;
    for (Id u : alg.unit_support) {
      const Id lx = m.left[u][x];
      if (lx != undef) {
        ++hit_l;
        if (lx != x) rep.add("unit-left", {u, x}, "unit summand moves basis vector");
      }
      const Id rx = m.right[x][u];
      if (rx != undef) {
        ++hit_r;
        if (rx != x) rep.add("unit-right", {x, u}, "unit summand moves basis vector");
      }
    }
    if (hit_l != 1 || hit_r != 1) rep.add("unit-module", {x}, "unit does not fix basis vector once");
  }

  for (Id x = 0; x < m.dim && rep.violations.size() < cap; ++x)
    for (Id y = 0; y < m.dim; ++y) {
      const Id ip = m.inner[x][y];
      const Id pi = m.inner[y][x];
      if ((ip == undef) != (pi == undef) || (ip != undef && alg.star[ip] != pi)) {
        rep.add("inner-star", {x, y}, "<x,y>* != <y,x>");
        break;
      }
      for (Id a = 0; a < adim; ++a) {
        const Id lhs = (right_of(y, a) == undef) ? undef : m.inner[x][right_of(y, a)];
        const Id rhs = (ip == undef) ? undef : alg.prod_at(ip, a);
        if (lhs != rhs) {
          rep.add("inner-right-linear", {x, y, a}, "<x, y.a> != <x,y>.a");
          break;
        }
        const Id lhs2 = (left_of(a, x) == undef) ? undef : m.inner[left_of(a, x)][y];
        const Id rhs2 = (left_of(alg.star[a], y) == undef) ? undef : m.inner[x][left_of(alg.star[a], y)];
        if (lhs2 != rhs2) {
          rep.add("inner-adjoint", {a, x, y}, "<a.x, y> != <x, a*.y>");
          break;
        }
      }
    }
  return rep;
}

kappa_check_result kappa_dimension_check(const graph_action& a) {
  const auto c = correspondence_crossed_product(a);
  const fd_correspondence& m = c.mod;
  const fd_star_algebra& alg = c.coeff.alg;

  // Module basis indices sharing an edge, for sparse theta columns.
  std::vector<std::vector<Id>> by_edge(a.graph.n_edges());
  for (Id z = 0; z < m.dim; ++z) by_edge[m.basis[z].second].push_back(z);

  // theta_{x,y}(z) = x <y, z>; columns are single entries, so each operator
  // is a sparse 0/1 matrix. Rank of the span = number of distinct operators,
  // provided their supports are pairwise disjoint (verified below).
  std::map<std::vector<std::pair<Id, Id>>, int> classes;
  for (Id x = 0; x < m.dim; ++x)
    for (Id y = 0; y < m.dim; ++y) {
      std::vector<std::pair<Id, Id>> entries;  // (col, row)
      for (Id z : by_edge[m.basis[y].second]) {
        const Id ip = m.inner[y][z];
        if (ip == undef) continue;
        const Id row = m.right[x][ip];
        if (row == undef) continue;
        entries.emplace_back(z, row);
      }
      if (entries.empty()) continue;
      std::sort(entries.begin(), entries.end());
      classes.emplace(std::move(entries), static_cast<int>(classes.size()));
    }

  std::map<std::pair<Id, Id>, int> owner;
  bool disjoint = true;
  for (const auto& [entries, id] : classes)
    for (const auto& pos : entries) {
      auto [it, fresh] = owner.emplace(pos, id);
      if (!fresh && it->second != id) {
        disjoint = false;
        break;
      }
    }

  kappa_check_result res;
  if (disjoint) {
    res.lhs = static_cast<long long>(classes.size());
  } else {
    // Support overlap between distinct operators: fall back to a dense rank.
    if (m.dim > 120)
      throw internal_consistency_error("kappa_dimension_check: overlap on a large instance");
    Eigen::MatrixXd stacked(static_cast<long>(classes.size()),
                            static_cast<long>(m.dim) * m.dim);
    stacked.setZero();
    long r = 0;
    for (const auto& [entries, id] : classes) {
      for (const auto& [col, row] : entries)
        stacked(r, static_cast<long>(row) * m.dim + col) = 1.0;
      ++r;
    }
    res.lhs = Eigen::ColPivHouseholderQR<Eigen::MatrixXd>(stacked).rank();
  }

  // Fibrewise compact-operator dimension: over each arrow's range unit, the
  // edge module over the vertex algebra contributes deg_src(x)^2 per vertex.
  std::vector<long long> fiber_dim(a.gpd.n_units, 0);
  for (Id u = 0; u < a.gpd.n_units; ++u) {
    for (Id v : fiber_vertices(a, u)) {
      long long deg = 0;
      for (Id e : fiber_edges(a, u))
        if (a.graph.esrc[e] == v) ++deg;
      fiber_dim[u] += deg * deg;
    }
  }
  res.rhs = 0;
  for (Id g = 0; g < a.gpd.n_arrows(); ++g) res.rhs += fiber_dim[a.gpd.rng[g]];

  res.ok = res.lhs == res.rhs;
  return res;
}

}  // namespace orbigraph
