#include "orbigraph/groupoid.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace orbigraph {

std::vector<Id> finite_groupoid::isotropy_arrows(Id u) const {
  std::vector<Id> out;
  for (Id g = 0; g < n_arrows(); ++g)
    if (src[g] == u && rng[g] == u) out.push_back(g);
  return out;
}

static void check_groupoid_shape(const finite_groupoid& g) {
  const std::size_t n = g.src.size();
  if (g.n_units < 0) throw malformed_input_error("groupoid: negative unit count");
  if (g.rng.size() != n || g.inv.size() != n)
    throw malformed_input_error("groupoid: src/rng/inv size mismatch");
  if (g.comp.size() != n * n) throw malformed_input_error("groupoid: composition table size mismatch");
  if (g.unit_arrow.size() != static_cast<std::size_t>(g.n_units))
    throw malformed_input_error("groupoid: unit arrow list size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (g.src[i] < 0 || g.src[i] >= g.n_units || g.rng[i] < 0 || g.rng[i] >= g.n_units)
      throw malformed_input_error("groupoid: dangling unit id on arrow " + std::to_string(i));
    if (g.inv[i] < 0 || g.inv[i] >= static_cast<Id>(n))
      throw malformed_input_error("groupoid: dangling inverse id on arrow " + std::to_string(i));
  }
  for (const Id c : g.comp)
    if (c != undef && (c < 0 || c >= static_cast<Id>(n)))
      throw malformed_input_error("groupoid: dangling arrow id in composition table");
  for (Id u = 0; u < g.n_units; ++u)
    if (g.unit_arrow[u] < 0 || g.unit_arrow[u] >= static_cast<Id>(n))
      throw malformed_input_error("groupoid: dangling unit arrow id");
}

validation_report validate_groupoid(const finite_groupoid& g) {
  check_groupoid_shape(g);
  validation_report rep;
  const Id n = g.n_arrows();
  const int cap = 256;

  for (Id u = 0; u < g.n_units; ++u) {
    const Id e = g.unit_arrow[u];
    if (g.src[e] != u || g.rng[e] != u)
      rep.add("unit-endpoints", {u, e}, "unit arrow of unit " + std::to_string(u) + " not a loop at it");
  }

  for (Id a = 0; a < n; ++a) {
    for (Id b = 0; b < n; ++b) {
      const Id ab = g.compose(a, b);
      const bool should = g.src[a] == g.rng[b];
      if (should && ab == undef)
        rep.add("composability", {a, b}, "src(a) == rng(b) but composite undefined");
      if (!should && ab != undef)
        rep.add("composability", {a, b}, "composite defined with src(a) != rng(b)");
      if (ab != undef && should) {
        if (g.src[ab] != g.src[b] || g.rng[ab] != g.rng[a])
          rep.add("composite-endpoints", {a, b, ab}, "endpoints of a.b wrong");
      }
      if (rep.violations.size() > cap) return rep;
    }
  }

  for (Id a = 0; a < n; ++a) {
    const Id ia = g.inv[a];
    if (g.src[ia] != g.rng[a] || g.rng[ia] != g.src[a])
      rep.add("inverse-endpoints", {a}, "inv swaps src and rng");
    else {
      if (g.compose(a, ia) != g.unit_arrow[g.rng[a]])
        rep.add("inverse", {a}, "a.inv(a) is not the unit at rng(a)");
      if (g.compose(ia, a) != g.unit_arrow[g.src[a]])
        rep.add("inverse", {a}, "inv(a).a is not the unit at src(a)");
    }
    if (rep.violations.size() > cap) return rep;
  }

  for (Id a = 0; a < n; ++a) {
    if (g.compose(a, g.unit_arrow[g.src[a]]) != a)
      rep.add("unit-law", {a}, "a.unit(src a) != a");
    if (g.compose(g.unit_arrow[g.rng[a]], a) != a)
      rep.add("unit-law", {a}, "unit(rng a).a != a");
    if (rep.violations.size() > cap) return rep;
  }

  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b) {
      if (g.src[a] != g.rng[b]) continue;
      const Id ab = g.compose(a, b);
      if (ab == undef) continue;
      for (Id c = 0; c < n; ++c) {
        if (g.src[b] != g.rng[c]) continue;
        const Id bc = g.compose(b, c);
        if (bc == undef) continue;
        if (g.compose(ab, c) != g.compose(a, bc)) {
          rep.add("associativity", {a, b, c}, "(ab)c != a(bc)");
          if (rep.violations.size() > cap) return rep;
        }
      }
    }
  return rep;
}

finite_groupoid build_transitive_groupoid(Id n_units, const finite_group& k) {
  if (n_units <= 0) throw precondition_error("build_transitive_groupoid: empty unit set");
  const Id m = k.order();
  finite_groupoid g;
  g.n_units = n_units;
  const Id n = n_units * m * n_units;
  g.src.resize(n);
  g.rng.resize(n);
  g.inv.resize(n);
  g.comp.assign(static_cast<std::size_t>(n) * n, undef);
  g.unit_arrow.resize(n_units);

  auto enc = [&](Id w, Id e, Id v) { return (w * m + e) * n_units + v; };
  for (Id w = 0; w < n_units; ++w)
    for (Id e = 0; e < m; ++e)
      for (Id v = 0; v < n_units; ++v) {
        const Id a = enc(w, e, v);
        g.rng[a] = w;
        g.src[a] = v;
        g.inv[a] = enc(v, k.inv[e], w);
      }
  for (Id u = 0; u < n_units; ++u) g.unit_arrow[u] = enc(u, k.identity, u);
  for (Id w = 0; w < n_units; ++w)
    for (Id e1 = 0; e1 < m; ++e1)
      for (Id v = 0; v < n_units; ++v)
        for (Id e2 = 0; e2 < m; ++e2)
          for (Id u = 0; u < n_units; ++u)
            g.comp_at(enc(w, e1, v), enc(v, e2, u)) = enc(w, k.mul[e1][e2], u);
  return g;
}

transitive_arrow decode_transitive_arrow(Id n_units, const finite_group& k, Id arrow) {
  const Id m = k.order();
  transitive_arrow t;
  t.src_unit = arrow % n_units;
  t.element = (arrow / n_units) % m;
  t.rng_unit = arrow / (n_units * m);
  return t;
}

Id encode_transitive_arrow(Id n_units, const finite_group& k, transitive_arrow a) {
  return (a.rng_unit * k.order() + a.element) * n_units + a.src_unit;
}

std::vector<std::vector<Id>> transitive_components(const finite_groupoid& g) {
  std::vector<Id> parent(g.n_units);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<Id(Id)> find = [&](Id x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (Id a = 0; a < g.n_arrows(); ++a) {
    Id x = find(g.src[a]), y = find(g.rng[a]);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
  std::vector<std::vector<Id>> comps;
  std::vector<Id> comp_of(g.n_units, undef);
  for (Id u = 0; u < g.n_units; ++u) {
    const Id r = find(u);
    if (comp_of[r] == undef) {
      comp_of[r] = static_cast<Id>(comps.size());
      comps.emplace_back();
    }
    comps[comp_of[r]].push_back(u);
  }
  return comps;
}

isotropy_group isotropy_at(const finite_groupoid& g, Id u) {
  isotropy_group res;
  res.arrow_of = g.isotropy_arrows(u);
  const Id m = static_cast<Id>(res.arrow_of.size());
  auto local = [&](Id arrow) {
    auto it = std::lower_bound(res.arrow_of.begin(), res.arrow_of.end(), arrow);
    if (it == res.arrow_of.end() || *it != arrow)
      throw internal_consistency_error("isotropy_at: composite left the isotropy set");
    return static_cast<Id>(it - res.arrow_of.begin());
  };
  res.group.mul.assign(m, std::vector<Id>(m));
  res.group.inv.assign(m, 0);
  for (Id i = 0; i < m; ++i) {
    for (Id j = 0; j < m; ++j) res.group.mul[i][j] = local(g.compose(res.arrow_of[i], res.arrow_of[j]));
    res.group.inv[i] = local(g.inv[res.arrow_of[i]]);
  }
  res.group.identity = local(g.unit_arrow[u]);
  return res;
}

Id isotropy_group::element_of_arrow(const finite_groupoid&, Id arrow) const {
  auto it = std::lower_bound(arrow_of.begin(), arrow_of.end(), arrow);
  if (it == arrow_of.end() || *it != arrow) return undef;
  return static_cast<Id>(it - arrow_of.begin());
}

}  // namespace orbigraph
