#ifndef ORBIGRAPH_FIXTURES_HPP
#define ORBIGRAPH_FIXTURES_HPP

#include <string>
#include <vector>

#include "orbigraph/graph_action.hpp"
#include "orbigraph/selfsim.hpp"

namespace orbigraph {

// Two vertices each carrying three loops, acted on by the transitive
// S3-groupoid: an arrow (w, s, v) sends loop i over v to loop s(i) over w.
graph_action two_vertex_loop_action();

// Four-edge self-similar action on vertices {v, w}: generators g: v -> w,
// h: w -> v with g.a = c, g|a = id; g.d = b, g|d = h; h.b = a, h|b = id;
// h.c = d, h|c = g.
selfsim_automaton four_edge_selfsim();

std::vector<std::string> fixture_names();
bool fixture_is_selfsim(const std::string& name);
graph_action fixture_graph_action(const std::string& name);     // throws malformed_input_error
selfsim_automaton fixture_selfsim(const std::string& name);     // throws malformed_input_error

}  // namespace orbigraph

#endif
