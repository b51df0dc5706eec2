#include "orbigraph/graph_action.hpp"

#include <algorithm>

namespace orbigraph {

space_action graph_action::vertex_action() const {
  return {gpd, vertex_anchor, vertex_act};
}

space_action graph_action::edge_action() const {
  std::vector<Id> anchor(graph.n_edges());
  for (Id e = 0; e < graph.n_edges(); ++e) anchor[e] = edge_anchor(e);
  return {gpd, anchor, edge_act};
}

validation_report validate_graph_action(const graph_action& a) {
  validate_graph(a.graph).require_ok("graph");
  if (a.vertex_anchor.size() != static_cast<std::size_t>(a.graph.n_vertices))
    throw malformed_input_error("graph action: vertex anchor size mismatch");

  validation_report rep;
  const std::size_t cap = 256;

  for (Id e = 0; e < a.graph.n_edges() && rep.violations.size() < cap; ++e)
    if (a.vertex_anchor[a.graph.esrc[e]] != a.vertex_anchor[a.graph.erng[e]])
      rep.add("edge-in-fibre", {e}, "edge endpoints anchored to different units");

  for (auto& v : validate_space_action(a.vertex_action()).violations) {
    v.rule = "vertex-" + v.rule;
    rep.violations.push_back(std::move(v));
    if (rep.violations.size() >= cap) return rep;
  }
  for (auto& v : validate_space_action(a.edge_action()).violations) {
    v.rule = "edge-" + v.rule;
    rep.violations.push_back(std::move(v));
    if (rep.violations.size() >= cap) return rep;
  }

  for (Id g = 0; g < a.gpd.n_arrows() && rep.violations.size() < cap; ++g)
    for (Id e = 0; e < a.graph.n_edges(); ++e) {
      const Id ge = a.edge_act[g][e];
      if (ge == undef) continue;
      const Id gs = a.vertex_act[g][a.graph.esrc[e]];
      const Id gr = a.vertex_act[g][a.graph.erng[e]];
      if (gs == undef || a.graph.esrc[ge] != gs)
        rep.add("source-equivariance", {g, e}, "src(g.e) != g.src(e)");
      if (gr == undef || a.graph.erng[ge] != gr)
        rep.add("range-equivariance", {g, e}, "rng(g.e) != g.rng(e)");
    }

  // Each arrow must map the edge fibre over its source unit bijectively onto
  // the fibre over its range unit.
  for (Id g = 0; g < a.gpd.n_arrows() && rep.violations.size() < cap; ++g) {
    std::vector<bool> hit(a.graph.n_edges(), false);
    for (Id e = 0; e < a.graph.n_edges(); ++e) {
      const Id ge = a.edge_act[g][e];
      if (ge == undef) continue;
      if (hit[ge]) rep.add("edge-bijectivity", {g, ge}, "two edges map to the same edge");
      hit[ge] = true;
    }
    for (Id e = 0; e < a.graph.n_edges() && rep.violations.size() < cap; ++e)
      if (a.edge_anchor(e) == a.gpd.rng[g] && !hit[e])
        rep.add("edge-bijectivity", {g, e}, "edge in the range fibre is not hit");
  }
  return rep;
}

graph_action_flags action_flags(const graph_action& a) {
  graph_action_flags f;
  f.no_sources = !has_sources(a.graph);
  f.locally_finite = true;
  return f;
}

graph_path act_on_path(const graph_action& a, Id g, const graph_path& p) {
  if (!path_ok(a.graph, p)) throw precondition_error("act_on_path: not a path");
  if (a.vertex_anchor[p.range_vertex] != a.gpd.src[g])
    throw precondition_error("act_on_path: range of path not anchored at src of arrow");
  graph_path out;
  out.range_vertex = a.vertex_act[g][p.range_vertex];
  out.edges.reserve(p.edges.size());
  for (Id e : p.edges) {
    const Id ge = a.edge_act[g][e];
    if (ge == undef) throw internal_consistency_error("act_on_path: edge image undefined");
    out.edges.push_back(ge);
  }
  return out;
}

std::vector<Id> fiber_vertices(const graph_action& a, Id unit) {
  std::vector<Id> out;
  for (Id v = 0; v < a.graph.n_vertices; ++v)
    if (a.vertex_anchor[v] == unit) out.push_back(v);
  return out;
}

std::vector<Id> fiber_edges(const graph_action& a, Id unit) {
  std::vector<Id> out;
  for (Id e = 0; e < a.graph.n_edges(); ++e)
    if (a.edge_anchor(e) == unit) out.push_back(e);
  return out;
}

fiber_graph_result fiber_graph(const graph_action& a, Id unit) {
  fiber_graph_result res;
  res.vertex_of = fiber_vertices(a, unit);
  res.edge_of = fiber_edges(a, unit);
  std::vector<Id> local(a.graph.n_vertices, undef);
  for (Id i = 0; i < static_cast<Id>(res.vertex_of.size()); ++i) local[res.vertex_of[i]] = i;
  res.graph.n_vertices = static_cast<Id>(res.vertex_of.size());
  for (Id e : res.edge_of) {
    res.graph.esrc.push_back(local[a.graph.esrc[e]]);
    res.graph.erng.push_back(local[a.graph.erng[e]]);
    res.graph.edge_names.push_back(a.graph.edge_name(e));
  }
  for (Id v : res.vertex_of) res.graph.vertex_names.push_back(a.graph.vertex_name(v));
  return res;
}

directed_graph orbit_quotient_graph_free(const graph_action& a) {
  const space_action va = a.vertex_action();
  const space_action ea = a.edge_action();
  for (Id v = 0; v < a.graph.n_vertices; ++v)
    if (stabilizer(va, v).group.order() != 1)
      throw precondition_error("orbit_quotient_graph_free: vertex stabilizer non-trivial");
  for (Id e = 0; e < a.graph.n_edges(); ++e)
    if (stabilizer(ea, e).group.order() != 1)
      throw precondition_error("orbit_quotient_graph_free: edge stabilizer non-trivial");

  const auto vorb = orbits(va);
  const auto eorb = orbits(ea);
  std::vector<Id> vclass(a.graph.n_vertices);
  for (Id i = 0; i < static_cast<Id>(vorb.size()); ++i)
    for (Id v : vorb[i]) vclass[v] = i;

  directed_graph out;
  out.n_vertices = static_cast<Id>(vorb.size());
  for (const auto& orb : eorb) {
    const Id e = orb.front();
    out.esrc.push_back(vclass[a.graph.esrc[e]]);
    out.erng.push_back(vclass[a.graph.erng[e]]);
  }
  return out;
}

graph_action trivial_action_on(const directed_graph& g) {
  graph_action a;
  a.graph = g;
  a.gpd.n_units = 1;
  a.gpd.src = {0};
  a.gpd.rng = {0};
  a.gpd.inv = {0};
  a.gpd.comp = {0};
  a.gpd.unit_arrow = {0};
  a.vertex_anchor.assign(g.n_vertices, 0);
  a.vertex_act.assign(1, std::vector<Id>(g.n_vertices));
  a.edge_act.assign(1, std::vector<Id>(g.n_edges()));
  for (Id v = 0; v < g.n_vertices; ++v) a.vertex_act[0][v] = v;
  for (Id e = 0; e < g.n_edges(); ++e) a.edge_act[0][e] = e;
  return a;
}

}  // namespace orbigraph
