#ifndef ORBIGRAPH_SELFSIM_HPP
#define ORBIGRAPH_SELFSIM_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbigraph/common.hpp"
#include "orbigraph/graph.hpp"
#include "orbigraph/graph_action.hpp"

namespace orbigraph {

// A word in the generators and their formal inverses. Letters are
// gen+1 for a generator and -(gen+1) for its inverse; the word reads left to
// right with the rightmost letter acting first. Endpoints are kept so the
// empty word at a vertex stays well-typed.
struct gen_word {
  Id src = undef, rng = undef;
  std::vector<int> letters;

  bool operator==(const gen_word&) const = default;
};

// Self-similar action presented as an automaton over a graph: generators
// move vertices, and for every generator g and edge e with rng(e) = src(g)
// the transition gives g.e together with the restriction word g|_e.
struct selfsim_automaton {
  directed_graph graph;
  std::vector<Id> gen_src, gen_rng;            // per generator
  std::vector<std::string> gen_names;          // may be empty
  // transition[g][e]: out edge and restriction, undef/empty when rng(e) != src(g)
  std::vector<std::vector<Id>> out_edge;
  std::vector<std::vector<gen_word>> restriction;

  Id n_generators() const { return static_cast<Id>(gen_src.size()); }
  std::string gen_name(Id g) const;
};

// Structural and axiom validation: transitions defined exactly on the fibre
// of src(g), edge maps bijective fibre-to-fibre with endpoints matching,
// restriction words well-typed (src = src of e's source vertex side).
validation_report validate_selfsim(const selfsim_automaton& a);

gen_word unit_word(const selfsim_automaton& a, Id vertex);
gen_word letter_word(const selfsim_automaton& a, int letter);
gen_word concat_words(const selfsim_automaton& a, const gen_word& l, const gen_word& r);
gen_word invert_word(const gen_word& w);

// w . p and the restriction w|_p, via the self-similarity recursion
// w.(e mu) = (w.e)(w|_e . mu). Requires rng(p) = src(w).
struct act_result {
  graph_path path;
  gen_word restriction;
};
act_result act_word(const selfsim_automaton& a, const gen_word& w, const graph_path& p);

// Orbit of a path under single letters, breadth-first; word_bound 0 means
// saturate (the orbit is finite). Paths ordered as discovered.
std::vector<graph_path> orbit_of_path(const selfsim_automaton& a, const graph_path& p,
                                      int word_bound = 0);

// Compare the actions of two words on every path of length <= depth with
// range src(w1); endpoints of the words must agree. A differing path is
// returned as witness.
struct equivalence_result {
  bool equal = false;
  int depth = 0;
  std::optional<graph_path> witness;
};
equivalence_result depth_bounded_equivalence(const selfsim_automaton& a, const gen_word& w1,
                                             const gen_word& w2, int depth);

// Finite path forest: vertices are paths of length <= depth (by length, then
// lexicographic), edges (mu, mu e) pointing from the longer path to mu.
struct forest_result {
  directed_graph graph;
  std::vector<graph_path> vertex_paths;
};
forest_result path_forest(const directed_graph& g, int depth);

// The action induced on the depth-bounded forest: arrows are the distinct
// partial bijections obtained from words, as a graph action on the forest.
graph_action induced_forest_action(const selfsim_automaton& a, int depth, int max_classes = 20000);

}  // namespace orbigraph

#endif
