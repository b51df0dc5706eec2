#include "orbigraph/graph.hpp"

#include <algorithm>
#include <sstream>

namespace orbigraph {

std::string directed_graph::vertex_name(Id v) const {
  if (v >= 0 && v < static_cast<Id>(vertex_names.size()) && !vertex_names[v].empty())
    return vertex_names[v];
  return "v" + std::to_string(v);
}

std::string directed_graph::edge_name(Id e) const {
  if (e >= 0 && e < static_cast<Id>(edge_names.size()) && !edge_names[e].empty())
    return edge_names[e];
  return "e" + std::to_string(e);
}

validation_report validate_graph(const directed_graph& g) {
  if (g.n_vertices < 0) throw malformed_input_error("graph: negative vertex count");
  if (g.erng.size() != g.esrc.size())
    throw malformed_input_error("graph: src/rng edge list size mismatch");
  for (Id e = 0; e < g.n_edges(); ++e)
    if (g.esrc[e] < 0 || g.esrc[e] >= g.n_vertices || g.erng[e] < 0 || g.erng[e] >= g.n_vertices)
      throw malformed_input_error("graph: dangling endpoint on edge " + std::to_string(e));
  return {};
}

bool has_sources(const directed_graph& g) {
  std::vector<bool> receives(g.n_vertices, false);
  for (Id e = 0; e < g.n_edges(); ++e) receives[g.erng[e]] = true;
  return std::find(receives.begin(), receives.end(), false) != receives.end();
}

bool has_sinks(const directed_graph& g) {
  std::vector<bool> emits(g.n_vertices, false);
  for (Id e = 0; e < g.n_edges(); ++e) emits[g.esrc[e]] = true;
  return std::find(emits.begin(), emits.end(), false) != emits.end();
}

Id path_source(const directed_graph& g, const graph_path& p) {
  if (p.edges.empty()) return p.range_vertex;
  return g.esrc[p.edges.back()];
}

bool path_ok(const directed_graph& g, const graph_path& p) {
  if (p.range_vertex < 0 || p.range_vertex >= g.n_vertices) return false;
  Id at = p.range_vertex;
  for (Id e : p.edges) {
    if (e < 0 || e >= g.n_edges() || g.erng[e] != at) return false;
    at = g.esrc[e];
  }
  return true;
}

graph_path concat_paths(const directed_graph& g, const graph_path& left, const graph_path& right) {
  if (path_source(g, left) != right.range_vertex)
    throw precondition_error("concat_paths: source of left path is not range of right path");
  graph_path out = left;
  out.edges.insert(out.edges.end(), right.edges.begin(), right.edges.end());
  return out;
}

std::vector<graph_path> paths_up_to(const directed_graph& g, const std::vector<Id>& range_vertices,
                                    int depth, const std::vector<bool>& edge_mask) {
  // in_edges[v]: edges with source v, ascending; extending a path appends at
  // its source end.
  std::vector<std::vector<Id>> by_range(g.n_vertices);
  for (Id e = 0; e < g.n_edges(); ++e)
    if (edge_mask.empty() || edge_mask[e]) by_range[g.erng[e]].push_back(e);

  auto level_less = [](const graph_path& x, const graph_path& y) {
    if (x.edges != y.edges) return x.edges < y.edges;
    return x.range_vertex < y.range_vertex;
  };

  std::vector<graph_path> out, level;
  for (Id v : range_vertices) level.push_back({v, {}});
  std::sort(level.begin(), level.end(), level_less);
  out = level;
  for (int len = 1; len <= depth; ++len) {
    std::vector<graph_path> next;
    for (const graph_path& p : level) {
      const Id tail = path_source(g, p);
      for (Id e : by_range[tail]) {
        graph_path q = p;
        q.edges.push_back(e);
        next.push_back(std::move(q));
      }
    }
    std::sort(next.begin(), next.end(), level_less);
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

std::string graph_to_dot(const directed_graph& g, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << (name.empty() ? "g" : name) << " {\n";
  for (Id v = 0; v < g.n_vertices; ++v)
    os << "  n" << v << " [label=\"" << g.vertex_name(v) << "\"];\n";
  for (Id e = 0; e < g.n_edges(); ++e)
    os << "  n" << g.esrc[e] << " -> n" << g.erng[e] << " [label=\"" << g.edge_name(e) << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace orbigraph
