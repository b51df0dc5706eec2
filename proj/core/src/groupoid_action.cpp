#include "orbigraph/groupoid_action.hpp"

#include <algorithm>

namespace orbigraph {

static void check_shape(const groupoid_on_groupoid_action& a) {
  const Id ng = a.actor.n_arrows();
  const Id nh = a.target.n_arrows();
  if (a.anchor.size() != static_cast<std::size_t>(nh))
    throw malformed_input_error("groupoid action: anchor size != target arrow count");
  if (a.act.size() != static_cast<std::size_t>(ng))
    throw malformed_input_error("groupoid action: table row count != actor arrow count");
  for (Id h = 0; h < nh; ++h)
    if (a.anchor[h] < 0 || a.anchor[h] >= a.actor.n_units)
      throw malformed_input_error("groupoid action: dangling anchor unit");
  for (Id g = 0; g < ng; ++g) {
    if (a.act[g].size() != static_cast<std::size_t>(nh))
      throw malformed_input_error("groupoid action: ragged table row");
    for (Id h = 0; h < nh; ++h)
      if (a.act[g][h] != undef && (a.act[g][h] < 0 || a.act[g][h] >= nh))
        throw malformed_input_error("groupoid action: dangling target arrow id");
  }
}

validation_report validate_groupoid_action(const groupoid_on_groupoid_action& a) {
  check_shape(a);
  validation_report rep;
  const Id ng = a.actor.n_arrows();
  const Id nh = a.target.n_arrows();
  const std::size_t cap = 256;

  // The underlying anchored space action on the arrow set.
  space_action as_set{a.actor, a.anchor, a.act};
  for (auto& v : validate_space_action(as_set).violations) {
    rep.violations.push_back(std::move(v));
    if (rep.violations.size() >= cap) return rep;
  }

  for (Id h = 0; h < nh && rep.violations.size() < cap; ++h) {
    const Id su = a.target.unit_arrow[a.target.src[h]];
    const Id ru = a.target.unit_arrow[a.target.rng[h]];
    if (a.anchor[h] != a.anchor[su] || a.anchor[h] != a.anchor[ru])
      rep.add("anchor-fibred", {h}, "anchor differs between arrow and its endpoint units");
  }

  std::vector<bool> is_unit(nh, false);
  for (Id u = 0; u < a.target.n_units; ++u) is_unit[a.target.unit_arrow[u]] = true;
  for (Id g = 0; g < ng && rep.violations.size() < cap; ++g)
    for (Id h = 0; h < nh; ++h) {
      const Id gh = a.act[g][h];
      if (gh == undef) continue;
      if (is_unit[h] && !is_unit[gh])
        rep.add("units-to-units", {g, h}, "image of a unit arrow is not a unit arrow");
      const Id gs = a.act[g][a.target.unit_arrow[a.target.src[h]]];
      const Id gr = a.act[g][a.target.unit_arrow[a.target.rng[h]]];
      if (gs == undef || gr == undef ||
          a.target.unit_arrow[a.target.src[gh]] != gs || a.target.unit_arrow[a.target.rng[gh]] != gr)
        rep.add("endpoint-equivariance", {g, h}, "src/rng of g.h differ from g.src(h)/g.rng(h)");
    }

  for (Id g = 0; g < ng && rep.violations.size() < cap; ++g)
    for (Id h1 = 0; h1 < nh; ++h1) {
      if (a.anchor[h1] != a.actor.src[g]) continue;
      for (Id h2 = 0; h2 < nh; ++h2) {
        const Id h12 = a.target.compose(h1, h2);
        if (h12 == undef) continue;
        const Id gh1 = a.act[g][h1], gh2 = a.act[g][h2], gh12 = a.act[g][h12];
        if (gh1 == undef || gh2 == undef || gh12 == undef ||
            a.target.compose(gh1, gh2) != gh12) {
          rep.add("composition-equivariance", {g, h1, h2}, "g.(h1 h2) != (g.h1)(g.h2)");
          if (rep.violations.size() >= cap) return rep;
        }
      }
    }

  for (Id g = 0; g < ng && rep.violations.size() < cap; ++g)
    for (Id h = 0; h < nh; ++h) {
      const Id gh = a.act[g][h];
      if (gh == undef) continue;
      if (a.act[g][a.target.inv[h]] != a.target.inv[gh])
        rep.add("inverse-equivariance", {g, h}, "g.(h^-1) != (g.h)^-1");
    }
  return rep;
}

space_action unit_space_action(const groupoid_on_groupoid_action& a) {
  space_action out;
  out.gpd = a.actor;
  const Id nu = a.target.n_units;
  out.anchor.resize(nu);
  for (Id x = 0; x < nu; ++x) out.anchor[x] = a.anchor[a.target.unit_arrow[x]];
  out.act.assign(a.actor.n_arrows(), std::vector<Id>(nu, undef));
  for (Id g = 0; g < a.actor.n_arrows(); ++g)
    for (Id x = 0; x < nu; ++x) {
      const Id gh = a.act[g][a.target.unit_arrow[x]];
      if (gh == undef) continue;
      if (a.target.src[gh] != a.target.rng[gh])
        throw internal_consistency_error("unit_space_action: unit image is not a loop");
      out.act[g][x] = a.target.src[gh];
    }
  return out;
}

fixed_subgroupoid_result fixed_subgroupoid(const groupoid_on_groupoid_action& a) {
  const Id nh = a.target.n_arrows();
  std::vector<bool> fixed(nh, true);
  for (Id h = 0; h < nh; ++h)
    for (Id g : a.actor.isotropy_arrows(a.anchor[h]))
      if (a.act[g][h] != h) {
        fixed[h] = false;
        break;
      }

  fixed_subgroupoid_result res;
  std::vector<Id> new_id(nh, undef);
  for (Id h = 0; h < nh; ++h)
    if (fixed[h]) {
      new_id[h] = static_cast<Id>(res.arrow_of.size());
      res.arrow_of.push_back(h);
    }
  std::vector<Id> new_unit(a.target.n_units, undef);
  for (Id u = 0; u < a.target.n_units; ++u)
    if (fixed[a.target.unit_arrow[u]]) {
      new_unit[u] = static_cast<Id>(res.unit_of.size());
      res.unit_of.push_back(u);
    }

  const Id na = static_cast<Id>(res.arrow_of.size());
  finite_groupoid& out = res.gpd;
  out.n_units = static_cast<Id>(res.unit_of.size());
  out.src.resize(na);
  out.rng.resize(na);
  out.inv.resize(na);
  out.comp.assign(static_cast<std::size_t>(na) * na, undef);
  out.unit_arrow.resize(out.n_units);
  for (Id i = 0; i < na; ++i) {
    const Id h = res.arrow_of[i];
    if (new_unit[a.target.src[h]] == undef || new_unit[a.target.rng[h]] == undef ||
        new_id[a.target.inv[h]] == undef)
      throw internal_consistency_error("fixed_subgroupoid: fixed set not closed");
    out.src[i] = new_unit[a.target.src[h]];
    out.rng[i] = new_unit[a.target.rng[h]];
    out.inv[i] = new_id[a.target.inv[h]];
  }
  for (Id u = 0; u < out.n_units; ++u) out.unit_arrow[u] = new_id[a.target.unit_arrow[res.unit_of[u]]];
  for (Id i = 0; i < na; ++i)
    for (Id j = 0; j < na; ++j) {
      const Id hij = a.target.compose(res.arrow_of[i], res.arrow_of[j]);
      if (hij == undef) continue;
      if (new_id[hij] == undef)
        throw internal_consistency_error("fixed_subgroupoid: fixed set not closed under composition");
      out.comp_at(i, j) = new_id[hij];
    }
  return res;
}

std::vector<std::vector<Id>> invariant_sections(const groupoid_on_groupoid_action& a) {
  if (transitive_components(a.actor).size() != 1)
    throw precondition_error("invariant_sections: actor groupoid is not transitive");
  const space_action a0 = unit_space_action(a);
  const Id base = 0;

  // A section is determined by its value at the base unit; that value must be
  // fixed by the base isotropy, and transporting it must satisfy invariance
  // against every arrow (verified outright below).
  std::vector<Id> to_unit(a.actor.n_units, undef);  // smallest arrow base -> v
  for (Id g = 0; g < a.actor.n_arrows(); ++g)
    if (a.actor.src[g] == base && to_unit[a.actor.rng[g]] == undef) to_unit[a.actor.rng[g]] = g;

  std::vector<std::vector<Id>> sections;
  for (Id x = 0; x < a0.n_points(); ++x) {
    if (a0.anchor[x] != base) continue;
    std::vector<Id> sigma(a.actor.n_units, undef);
    bool ok = true;
    for (Id v = 0; v < a.actor.n_units && ok; ++v) {
      if (to_unit[v] == undef) {
        ok = false;  // unreachable unit, cannot happen for a transitive actor
        break;
      }
      sigma[v] = a0.act[to_unit[v]][x];
      if (sigma[v] == undef) ok = false;
    }
    for (Id g = 0; g < a.actor.n_arrows() && ok; ++g)
      if (a0.act[g][sigma[a.actor.src[g]]] != sigma[a.actor.rng[g]]) ok = false;
    if (ok) sections.push_back(std::move(sigma));
  }
  return sections;
}

crossed_product_result crossed_product_groupoid(const groupoid_on_groupoid_action& a) {
  const Id ng = a.actor.n_arrows();
  const Id nh = a.target.n_arrows();
  const space_action a0 = unit_space_action(a);

  crossed_product_result res;
  std::vector<std::vector<Id>> pair_id(ng, std::vector<Id>(nh, undef));
  for (Id g = 0; g < ng; ++g)
    for (Id h = 0; h < nh; ++h)
      if (a.actor.src[g] == a.anchor[h]) {
        pair_id[g][h] = static_cast<Id>(res.pairs.size());
        res.pairs.emplace_back(g, h);
      }

  const Id na = static_cast<Id>(res.pairs.size());
  finite_groupoid& out = res.gpd;
  out.n_units = a.target.n_units;
  out.src.resize(na);
  out.rng.resize(na);
  out.inv.resize(na);
  out.comp.assign(static_cast<std::size_t>(na) * na, undef);
  out.unit_arrow.resize(out.n_units);

  for (Id i = 0; i < na; ++i) {
    auto [g, h] = res.pairs[i];
    out.src[i] = a.target.src[h];
    out.rng[i] = a0.act[g][a.target.rng[h]];
    if (out.rng[i] == undef)
      throw internal_consistency_error("crossed_product_groupoid: rng transport undefined");
    const Id ginv_h_inv = a.act[g][a.target.inv[h]];
    if (ginv_h_inv == undef)
      throw internal_consistency_error("crossed_product_groupoid: inverse transport undefined");
    out.inv[i] = pair_id[a.actor.inv[g]][ginv_h_inv];
    if (out.inv[i] == undef)
      throw internal_consistency_error("crossed_product_groupoid: inverse pair not present");
  }
  for (Id x = 0; x < out.n_units; ++x) {
    const Id gu = a.actor.unit_arrow[a0.anchor[x]];
    out.unit_arrow[x] = pair_id[gu][a.target.unit_arrow[x]];
  }

  for (Id i = 0; i < na; ++i) {
    auto [g1, h1] = res.pairs[i];
    for (Id j = 0; j < na; ++j) {
      auto [g2, h2] = res.pairs[j];
      if (out.src[i] != out.rng[j]) continue;  // src(h1) == g2 . rng(h2)
      const Id g12 = a.actor.compose(g1, g2);
      const Id h1_back = a.act[a.actor.inv[g2]][h1];
      if (g12 == undef || h1_back == undef)
        throw internal_consistency_error("crossed_product_groupoid: composable pair fails transport");
      const Id h12 = a.target.compose(h1_back, h2);
      if (h12 == undef)
        throw internal_consistency_error("crossed_product_groupoid: transported arrows not composable");
      out.comp_at(i, j) = pair_id[g12][h12];
    }
  }
  return res;
}

groupoid_on_groupoid_action as_cotrivial_action(const space_action& a) {
  groupoid_on_groupoid_action out;
  out.actor = a.gpd;
  const Id np = a.n_points();
  out.target.n_units = np;
  out.target.src.resize(np);
  out.target.rng.resize(np);
  out.target.inv.resize(np);
  out.target.unit_arrow.resize(np);
  out.target.comp.assign(static_cast<std::size_t>(np) * np, undef);
  for (Id x = 0; x < np; ++x) {
    out.target.src[x] = out.target.rng[x] = out.target.inv[x] = out.target.unit_arrow[x] = x;
    out.target.comp_at(x, x) = x;
  }
  out.anchor = a.anchor;
  out.act = a.act;
  return out;
}

}  // namespace orbigraph
