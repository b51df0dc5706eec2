#ifndef ORBIGRAPH_GRAPH_HPP
#define ORBIGRAPH_GRAPH_HPP

#include <string>
#include <vector>

#include "orbigraph/common.hpp"

namespace orbigraph {

// Finite directed multigraph. Optional labels are carried for I/O only.
struct directed_graph {
  Id n_vertices = 0;
  std::vector<Id> esrc, erng;          // per edge
  std::vector<std::string> vertex_names, edge_names;  // may be empty

  Id n_edges() const { return static_cast<Id>(esrc.size()); }
  std::string vertex_name(Id v) const;
  std::string edge_name(Id e) const;
};

validation_report validate_graph(const directed_graph& g);

// Vertex with no incoming edge (empty preimage under erng).
bool has_sources(const directed_graph& g);
// Vertex with no outgoing edge.
bool has_sinks(const directed_graph& g);

// A path e1 e2 ... ek listed range-to-source: src(e_i) == rng(e_{i+1}).
// The empty path at a vertex is kept as {vertex, {}}.
struct graph_path {
  Id range_vertex = undef;
  std::vector<Id> edges;

  int length() const { return static_cast<int>(edges.size()); }
  bool operator==(const graph_path&) const = default;
};

Id path_source(const directed_graph& g, const graph_path& p);
bool path_ok(const directed_graph& g, const graph_path& p);
graph_path concat_paths(const directed_graph& g, const graph_path& left, const graph_path& right);

// All paths with range in the given fibre of vertices, by length 0..depth,
// lexicographic in edge ids within a length. Vertices/edges outside the
// fibre mask (when non-empty) are excluded.
std::vector<graph_path> paths_up_to(const directed_graph& g, const std::vector<Id>& range_vertices,
                                    int depth, const std::vector<bool>& edge_mask = {});

// Deterministic DOT output: vertices and edges in id order.
std::string graph_to_dot(const directed_graph& g, const std::string& name);

}  // namespace orbigraph

#endif
