#ifndef ORBIGRAPH_GRAPH_ACTION_HPP
#define ORBIGRAPH_GRAPH_ACTION_HPP

#include <string>
#include <vector>

#include "orbigraph/common.hpp"
#include "orbigraph/graph.hpp"
#include "orbigraph/groupoid.hpp"
#include "orbigraph/space_action.hpp"

namespace orbigraph {

// Groupoid acting on a graph: compatible actions on vertices and edges with
// every edge kept inside one vertex fibre (anchor of src(e) == anchor of
// rng(e)) and endpoint maps equivariant.
struct graph_action {
  finite_groupoid gpd;
  directed_graph graph;
  std::vector<Id> vertex_anchor;             // vertex -> unit
  std::vector<std::vector<Id>> vertex_act;   // [arrow][vertex]
  std::vector<std::vector<Id>> edge_act;     // [arrow][edge]

  Id edge_anchor(Id e) const { return vertex_anchor[graph.erng[e]]; }
  space_action vertex_action() const;
  space_action edge_action() const;
};

validation_report validate_graph_action(const graph_action& a);

// Flags that downstream constructions care about; computed, not enforced.
struct graph_action_flags {
  bool no_sources = false;       // every vertex receives an edge
  bool locally_finite = true;    // finite graph, always true here
};
graph_action_flags action_flags(const graph_action& a);

// g . (e1 ... ek) edgewise; defined when anchor of rng(path) == src(g).
graph_path act_on_path(const graph_action& a, Id g, const graph_path& p);

// Vertex ids and edge ids lying over the given unit.
std::vector<Id> fiber_vertices(const graph_action& a, Id unit);
std::vector<Id> fiber_edges(const graph_action& a, Id unit);
// The fibre over a unit as a standalone graph plus id maps back.
struct fiber_graph_result {
  directed_graph graph;
  std::vector<Id> vertex_of, edge_of;  // fibre id -> ambient id
};
fiber_graph_result fiber_graph(const graph_action& a, Id unit);

// Quotient graph of a free action: vertices = vertex orbits, edges = edge
// orbits, endpoints induced on representatives. Throws precondition_error
// when some vertex or edge stabilizer is non-trivial.
directed_graph orbit_quotient_graph_free(const graph_action& a);

// Wraps a bare graph as an action of the trivial groupoid on one unit.
graph_action trivial_action_on(const directed_graph& g);

}  // namespace orbigraph

#endif
