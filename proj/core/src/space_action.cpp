#include "orbigraph/space_action.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace orbigraph {

static void check_action_shape(const space_action& a) {
  const Id n = a.gpd.n_arrows();
  const Id np = a.n_points();
  if (a.act.size() != static_cast<std::size_t>(n))
    throw malformed_input_error("action: table row count != arrow count");
  for (Id x = 0; x < np; ++x)
    if (a.anchor[x] < 0 || a.anchor[x] >= a.gpd.n_units)
      throw malformed_input_error("action: dangling anchor unit on point " + std::to_string(x));
  for (Id g = 0; g < n; ++g) {
    if (a.act[g].size() != static_cast<std::size_t>(np))
      throw malformed_input_error("action: ragged table row " + std::to_string(g));
    for (Id x = 0; x < np; ++x)
      if (a.act[g][x] != undef && (a.act[g][x] < 0 || a.act[g][x] >= np))
        throw malformed_input_error("action: dangling point id in table");
  }
}

validation_report validate_space_action(const space_action& a) {
  check_action_shape(a);
  validation_report rep;
  const Id n = a.gpd.n_arrows();
  const Id np = a.n_points();
  const std::size_t cap = 256;

  for (Id g = 0; g < n && rep.violations.size() < cap; ++g)
    for (Id x = 0; x < np; ++x) {
      const Id y = a.act[g][x];
      const bool should = a.gpd.src[g] == a.anchor[x];
      if (should && y == undef)
        rep.add("definedness", {g, x}, "src(g) == anchor(x) but g.x undefined");
      if (!should && y != undef)
        rep.add("definedness", {g, x}, "g.x defined with src(g) != anchor(x)");
      if (y != undef && should && a.anchor[y] != a.gpd.rng[g])
        rep.add("anchor-equivariance", {g, x, y}, "anchor(g.x) != rng(g)");
    }

  for (Id u = 0; u < a.gpd.n_units && rep.violations.size() < cap; ++u) {
    const Id e = a.gpd.unit_arrow[u];
    for (Id x = 0; x < np; ++x)
      if (a.anchor[x] == u && a.act[e][x] != x)
        rep.add("unit-acts-trivially", {e, x}, "unit arrow moves point " + std::to_string(x));
  }

  for (Id g1 = 0; g1 < n && rep.violations.size() < cap; ++g1)
    for (Id g2 = 0; g2 < n; ++g2) {
      const Id g12 = a.gpd.compose(g1, g2);
      if (g12 == undef) continue;
      for (Id x = 0; x < np; ++x) {
        if (a.anchor[x] != a.gpd.src[g2]) continue;
        const Id g2x = a.act[g2][x];
        if (g2x == undef) continue;
        if (a.act[g1][g2x] != a.act[g12][x]) {
          rep.add("multiplicativity", {g1, g2, x}, "g1.(g2.x) != (g1 g2).x");
          if (rep.violations.size() >= cap) break;
        }
      }
    }
  return rep;
}

std::vector<std::vector<Id>> orbits(const space_action& a) {
  const Id np = a.n_points();
  std::vector<Id> parent(np);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<Id(Id)> find = [&](Id x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (Id g = 0; g < a.gpd.n_arrows(); ++g)
    for (Id x = 0; x < np; ++x)
      if (a.act[g][x] != undef) {
        Id p = find(x), q = find(a.act[g][x]);
        if (p != q) parent[std::max(p, q)] = std::min(p, q);
      }
  std::vector<std::vector<Id>> out;
  std::vector<Id> orbit_of(np, undef);
  for (Id x = 0; x < np; ++x) {
    const Id r = find(x);
    if (orbit_of[r] == undef) {
      orbit_of[r] = static_cast<Id>(out.size());
      out.emplace_back();
    }
    out[orbit_of[r]].push_back(x);
  }
  return out;
}

std::vector<Id> fixed_points(const space_action& a) {
  std::vector<Id> out;
  for (Id x = 0; x < a.n_points(); ++x) {
    bool fixed = true;
    for (Id g : a.gpd.isotropy_arrows(a.anchor[x]))
      if (a.act[g][x] != x) {
        fixed = false;
        break;
      }
    if (fixed) out.push_back(x);
  }
  return out;
}

isotropy_group stabilizer(const space_action& a, Id x) {
  isotropy_group res;
  for (Id g : a.gpd.isotropy_arrows(a.anchor[x]))
    if (a.act[g][x] == x) res.arrow_of.push_back(g);
  const Id m = static_cast<Id>(res.arrow_of.size());
  auto local = [&](Id arrow) {
    auto it = std::lower_bound(res.arrow_of.begin(), res.arrow_of.end(), arrow);
    if (it == res.arrow_of.end() || *it != arrow)
      throw internal_consistency_error("stabilizer: not closed under composition");
    return static_cast<Id>(it - res.arrow_of.begin());
  };
  res.group.mul.assign(m, std::vector<Id>(m));
  res.group.inv.assign(m, 0);
  for (Id i = 0; i < m; ++i) {
    for (Id j = 0; j < m; ++j)
      res.group.mul[i][j] = local(a.gpd.compose(res.arrow_of[i], res.arrow_of[j]));
    res.group.inv[i] = local(a.gpd.inv[res.arrow_of[i]]);
  }
  res.group.identity = local(a.gpd.unit_arrow[a.anchor[x]]);
  return res;
}

action_groupoid_result action_groupoid(const space_action& a) {
  const Id n = a.gpd.n_arrows();
  const Id np = a.n_points();
  action_groupoid_result res;
  res.pair_id.assign(n, std::vector<Id>(np, undef));
  for (Id g = 0; g < n; ++g)
    for (Id x = 0; x < np; ++x)
      if (a.gpd.src[g] == a.anchor[x]) {
        res.pair_id[g][x] = static_cast<Id>(res.pairs.size());
        res.pairs.emplace_back(g, x);
      }
  const Id na = static_cast<Id>(res.pairs.size());
  finite_groupoid& out = res.gpd;
  out.n_units = np;
  out.src.resize(na);
  out.rng.resize(na);
  out.inv.resize(na);
  out.comp.assign(static_cast<std::size_t>(na) * na, undef);
  out.unit_arrow.resize(np);
  for (Id i = 0; i < na; ++i) {
    auto [g, x] = res.pairs[i];
    out.src[i] = x;
    out.rng[i] = a.act[g][x];
    out.inv[i] = res.pair_id[a.gpd.inv[g]][a.act[g][x]];
  }
  for (Id x = 0; x < np; ++x) out.unit_arrow[x] = res.pair_id[a.gpd.unit_arrow[a.anchor[x]]][x];
  for (Id i = 0; i < na; ++i) {
    auto [g1, x1] = res.pairs[i];
    for (Id j = 0; j < na; ++j) {
      auto [g2, x2] = res.pairs[j];
      if (x1 != a.act[g2][x2]) continue;  // src(i) must be rng(j)
      const Id g12 = a.gpd.compose(g1, g2);
      if (g12 == undef)
        throw internal_consistency_error("action_groupoid: anchors out of sync with composition");
      out.comp_at(i, j) = res.pair_id[g12][x2];
    }
  }
  return res;
}

}  // namespace orbigraph
