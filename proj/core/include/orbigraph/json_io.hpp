#ifndef ORBIGRAPH_JSON_IO_HPP
#define ORBIGRAPH_JSON_IO_HPP

#include <string>

#include "orbigraph/correspondence.hpp"
#include "orbigraph/dr.hpp"
#include "orbigraph/graph.hpp"
#include "orbigraph/graph_action.hpp"
#include "orbigraph/groupoid.hpp"
#include "orbigraph/selfsim.hpp"
#include "orbigraph/snf.hpp"
#include "orbigraph/spectrum.hpp"

namespace orbigraph {

// Parsers throw malformed_input_error on syntax errors, missing fields,
// ragged tables or dangling ids. They do not run axiom validation.
finite_groupoid parse_groupoid_json(const std::string& text);
directed_graph parse_graph_json(const std::string& text);
graph_action parse_graph_action_json(const std::string& text);
selfsim_automaton parse_selfsim_json(const std::string& text);

// Serializers are deterministic: ids ascending, object keys sorted.
std::string groupoid_to_json(const finite_groupoid& g);
std::string graph_to_json(const directed_graph& g);
std::string graph_action_to_json(const graph_action& a);
std::string selfsim_to_json(const selfsim_automaton& a);
std::string report_to_json(const validation_report& r);
std::string quotient_report_to_json(const quotient_graph_report& r);
std::string bratteli_to_json(const bratteli_diagram& d);
std::string kappa_to_json(const kappa_check_result& r);
std::string ktheory_to_json(const graph_k_theory_result& r);
std::string invariants_to_json(const abelian_invariants& g);

// FNV-1a 64-bit digest, hex encoded; used for input manifests and cache keys.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace orbigraph

#endif
