#include "orbigraph/fixtures.hpp"

#include <algorithm>
#include <numeric>

namespace orbigraph {

graph_action two_vertex_loop_action() {
  const finite_group k = symmetric_group(3);

  // One-line forms in the enumeration order of the group constructor,
  // cross-checked against its multiplication table below.
  std::vector<std::vector<Id>> perms;
  std::vector<Id> base = {0, 1, 2};
  do {
    perms.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  for (Id a = 0; a < k.order(); ++a)
    for (Id b = 0; b < k.order(); ++b)
      for (int i = 0; i < 3; ++i)
        if (perms[k.mul[a][b]][i] != perms[a][perms[b][i]])
          throw internal_consistency_error("loop fixture: permutation order drifted");

  graph_action act;
  act.gpd = build_transitive_groupoid(2, k);
  act.graph.n_vertices = 2;
  act.graph.vertex_names = {"v", "w"};
  for (Id u = 0; u < 2; ++u)
    for (int i = 0; i < 3; ++i) {
      act.graph.esrc.push_back(u);
      act.graph.erng.push_back(u);
      act.graph.edge_names.push_back(std::string(u == 0 ? "a" : "b") + std::to_string(i + 1));
    }
  act.vertex_anchor = {0, 1};

  const Id narrows = act.gpd.n_arrows();
  act.vertex_act.assign(narrows, std::vector<Id>(2, undef));
  act.edge_act.assign(narrows, std::vector<Id>(6, undef));
  for (Id g = 0; g < narrows; ++g) {
    const transitive_arrow t = decode_transitive_arrow(2, k, g);
    act.vertex_act[g][t.src_unit] = t.rng_unit;
    for (int i = 0; i < 3; ++i)
      act.edge_act[g][t.src_unit * 3 + i] = t.rng_unit * 3 + perms[t.element][i];
  }
  return act;
}

selfsim_automaton four_edge_selfsim() {
  selfsim_automaton a;
  a.graph.n_vertices = 2;
  a.graph.vertex_names = {"v", "w"};
  // range-to-source reading: edge e goes rng <- src
  a.graph.edge_names = {"a", "b", "c", "d"};
  a.graph.erng = {0, 1, 1, 0};
  a.graph.esrc = {0, 0, 0, 1};
  a.gen_names = {"g", "h"};
  a.gen_src = {0, 1};
  a.gen_rng = {1, 0};
  a.out_edge.assign(2, std::vector<Id>(4, undef));
  a.restriction.assign(2, std::vector<gen_word>(4));

  const Id ea = 0, eb = 1, ec = 2, ed = 3;
  auto set = [&](Id gen, Id edge, Id out, gen_word w) {
    a.out_edge[gen][edge] = out;
    a.restriction[gen][edge] = std::move(w);
  };
  set(0, ea, ec, unit_word(a, 0));     // g.a = c, g|a = id_v
  set(0, ed, eb, letter_word(a, 2));   // g.d = b, g|d = h
  set(1, eb, ea, unit_word(a, 0));     // h.b = a, h|b = id_v
  set(1, ec, ed, letter_word(a, 1));   // h.c = d, h|c = g
  return a;
}

std::vector<std::string> fixture_names() { return {"example-4.3", "example-4.6"}; }

bool fixture_is_selfsim(const std::string& name) { return name == "example-4.6"; }

graph_action fixture_graph_action(const std::string& name) {
  if (name == "example-4.3") return two_vertex_loop_action();
  throw malformed_input_error("unknown graph action fixture: " + name);
}

selfsim_automaton fixture_selfsim(const std::string& name) {
  if (name == "example-4.6") return four_edge_selfsim();
  throw malformed_input_error("unknown automaton fixture: " + name);
}

}  // namespace orbigraph
