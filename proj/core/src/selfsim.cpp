#include "orbigraph/selfsim.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace orbigraph {

std::string selfsim_automaton::gen_name(Id g) const {
  if (g >= 0 && g < static_cast<Id>(gen_names.size()) && !gen_names[g].empty()) return gen_names[g];
  return "g" + std::to_string(g);
}

namespace {

void letter_endpoints(const selfsim_automaton& a, int letter, Id& src, Id& rng) {
  const Id g = std::abs(letter) - 1;
  if (letter > 0) {
    src = a.gen_src[g];
    rng = a.gen_rng[g];
  } else {
    src = a.gen_rng[g];
    rng = a.gen_src[g];
  }
}

// e' with g.e' = e, for the inverse letter.
Id inverse_edge(const selfsim_automaton& a, Id g, Id e) {
  for (Id e2 = 0; e2 < a.graph.n_edges(); ++e2)
    if (a.out_edge[g][e2] == e) return e2;
  return undef;
}

}  // namespace

validation_report validate_selfsim(const selfsim_automaton& a) {
  validate_graph(a.graph).require_ok("automaton graph");
  const Id ng = a.n_generators();
  const Id ne = a.graph.n_edges();
  if (a.gen_rng.size() != static_cast<std::size_t>(ng))
    throw malformed_input_error("automaton: generator src/rng size mismatch");
  if (a.out_edge.size() != static_cast<std::size_t>(ng) ||
      a.restriction.size() != static_cast<std::size_t>(ng))
    throw malformed_input_error("automaton: transition table size mismatch");
  for (Id g = 0; g < ng; ++g) {
    if (a.gen_src[g] < 0 || a.gen_src[g] >= a.graph.n_vertices || a.gen_rng[g] < 0 ||
        a.gen_rng[g] >= a.graph.n_vertices)
      throw malformed_input_error("automaton: dangling generator endpoint");
    if (a.out_edge[g].size() != static_cast<std::size_t>(ne) ||
        a.restriction[g].size() != static_cast<std::size_t>(ne))
      throw malformed_input_error("automaton: ragged transition row");
    for (Id e = 0; e < ne; ++e)
      if (a.out_edge[g][e] != undef && (a.out_edge[g][e] < 0 || a.out_edge[g][e] >= ne))
        throw malformed_input_error("automaton: dangling out edge id");
  }

  validation_report rep;
  const std::size_t cap = 256;
  for (Id g = 0; g < ng && rep.violations.size() < cap; ++g) {
    std::vector<bool> hit(ne, false);
    for (Id e = 0; e < ne; ++e) {
      const bool should = a.graph.erng[e] == a.gen_src[g];
      const Id out = a.out_edge[g][e];
      if (should && out == undef) {
        rep.add("transition-definedness", {g, e}, "edge over src(g) has no transition");
        continue;
      }
      if (!should && out != undef) {
        rep.add("transition-definedness", {g, e}, "transition defined off the src(g) fibre");
        continue;
      }
      if (out == undef) continue;
      if (a.graph.erng[out] != a.gen_rng[g])
        rep.add("transition-range", {g, e, out}, "g.e does not end at rng(g)");
      if (hit[out]) rep.add("transition-bijective", {g, out}, "two edges map to the same edge");
      hit[out] = true;

      const gen_word& w = a.restriction[g][e];
      if (w.src != a.graph.esrc[e] || w.rng != a.graph.esrc[out]) {
        rep.add("restriction-endpoints", {g, e}, "restriction word endpoints mismatch");
        continue;
      }
      Id at = w.src;
      bool word_ok = true;
      for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        const int letter = *it;
        const Id gen = std::abs(letter) - 1;
        if (letter == 0 || gen >= ng) {
          rep.add("restriction-letters", {g, e}, "letter out of range");
          word_ok = false;
          break;
        }
        Id ls, lr;
        letter_endpoints(a, letter, ls, lr);
        if (ls != at) {
          rep.add("restriction-letters", {g, e}, "letters not composable");
          word_ok = false;
          break;
        }
        at = lr;
      }
      if (word_ok && at != w.rng)
        rep.add("restriction-letters", {g, e}, "word does not end at its declared range");
    }
    for (Id e = 0; e < ne && rep.violations.size() < cap; ++e)
      if (a.graph.erng[e] == a.gen_rng[g] && !hit[e])
        rep.add("transition-bijective", {g, e}, "edge over rng(g) never hit");
  }
  return rep;
}

gen_word unit_word(const selfsim_automaton&, Id vertex) { return {vertex, vertex, {}}; }

gen_word letter_word(const selfsim_automaton& a, int letter) {
  gen_word w;
  letter_endpoints(a, letter, w.src, w.rng);
  w.letters = {letter};
  return w;
}

gen_word concat_words(const selfsim_automaton&, const gen_word& l, const gen_word& r) {
  if (l.src != r.rng) throw precondition_error("concat_words: words not composable");
  gen_word out;
  out.src = r.src;
  out.rng = l.rng;
  out.letters = l.letters;
  out.letters.insert(out.letters.end(), r.letters.begin(), r.letters.end());
  return out;
}

gen_word invert_word(const gen_word& w) {
  gen_word out;
  out.src = w.rng;
  out.rng = w.src;
  out.letters.assign(w.letters.rbegin(), w.letters.rend());
  for (int& l : out.letters) l = -l;
  return out;
}

namespace {

// Single letter acting on a path, with restriction, by the recursion
// l.(e mu) = (l.e)((l|_e).mu).
act_result act_letter(const selfsim_automaton& a, int letter, const graph_path& p);

act_result act_word_impl(const selfsim_automaton& a, const gen_word& w, const graph_path& p) {
  if (p.range_vertex != w.src)
    throw precondition_error("act_word: path range does not match word source");
  act_result res{p, unit_word(a, path_source(a.graph, p))};
  // Rightmost letter acts first; restrictions compose with the leftmost
  // letter's restriction on the left.
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    act_result step = act_letter(a, *it, res.path);
    res.path = std::move(step.path);
    res.restriction = concat_words(a, step.restriction, res.restriction);
  }
  return res;
}

act_result act_letter(const selfsim_automaton& a, int letter, const graph_path& p) {
  Id lsrc, lrng;
  letter_endpoints(a, letter, lsrc, lrng);
  if (p.range_vertex != lsrc)
    throw precondition_error("act_word: letter not applicable to path");
  if (p.edges.empty()) return {graph_path{lrng, {}}, letter_word(a, letter)};

  const Id e = p.edges.front();
  graph_path tail;
  tail.range_vertex = a.graph.esrc[e];
  tail.edges.assign(p.edges.begin() + 1, p.edges.end());

  Id out;
  gen_word rest;
  if (letter > 0) {
    const Id g = letter - 1;
    out = a.out_edge[g][e];
    if (out == undef) throw internal_consistency_error("act_word: missing transition");
    rest = a.restriction[g][e];
  } else {
    const Id g = -letter - 1;
    const Id pre = inverse_edge(a, g, e);
    if (pre == undef) throw internal_consistency_error("act_word: missing inverse transition");
    out = pre;
    rest = invert_word(a.restriction[g][pre]);
  }

  act_result deeper = act_word_impl(a, rest, tail);
  graph_path q;
  q.range_vertex = a.graph.erng[out];
  q.edges.push_back(out);
  q.edges.insert(q.edges.end(), deeper.path.edges.begin(), deeper.path.edges.end());
  return {std::move(q), std::move(deeper.restriction)};
}

}  // namespace

act_result act_word(const selfsim_automaton& a, const gen_word& w, const graph_path& p) {
  if (!path_ok(a.graph, p)) throw precondition_error("act_word: not a path");
  return act_word_impl(a, w, p);
}

std::vector<graph_path> orbit_of_path(const selfsim_automaton& a, const graph_path& p,
                                      int word_bound) {
  if (!path_ok(a.graph, p)) throw precondition_error("orbit_of_path: not a path");
  std::vector<graph_path> out = {p};
  std::deque<std::pair<graph_path, int>> queue = {{p, 0}};
  auto seen = [&](const graph_path& q) {
    return std::find(out.begin(), out.end(), q) != out.end();
  };
  while (!queue.empty()) {
    auto [cur, depth] = queue.front();
    queue.pop_front();
    if (word_bound > 0 && depth >= word_bound) continue;
    for (Id g = 0; g < a.n_generators(); ++g)
      for (int sign = +1; sign >= -1; sign -= 2) {
        const int letter = sign * (g + 1);
        Id ls, lr;
        letter_endpoints(a, letter, ls, lr);
        if (cur.range_vertex != ls) continue;
        graph_path next = act_word(a, letter_word(a, letter), cur).path;
        if (!seen(next)) {
          out.push_back(next);
          queue.emplace_back(std::move(next), depth + 1);
        }
      }
  }
  return out;
}

equivalence_result depth_bounded_equivalence(const selfsim_automaton& a, const gen_word& w1,
                                             const gen_word& w2, int depth) {
  if (w1.src != w2.src || w1.rng != w2.rng)
    throw precondition_error("depth_bounded_equivalence: word endpoints differ");
  if (depth < 0) throw precondition_error("depth_bounded_equivalence: negative depth");
  equivalence_result res;
  res.depth = depth;
  for (const graph_path& p : paths_up_to(a.graph, {w1.src}, depth)) {
    if (act_word(a, w1, p).path != act_word(a, w2, p).path) {
      res.equal = false;
      res.witness = p;
      return res;
    }
  }
  res.equal = true;
  return res;
}

forest_result path_forest(const directed_graph& g, int depth) {
  if (depth < 0) throw precondition_error("path_forest: negative depth");
  forest_result res;
  std::vector<Id> all(g.n_vertices);
  for (Id v = 0; v < g.n_vertices; ++v) all[v] = v;
  res.vertex_paths = paths_up_to(g, all, depth);

  std::map<std::pair<Id, std::vector<Id>>, Id> index;
  for (Id i = 0; i < static_cast<Id>(res.vertex_paths.size()); ++i)
    index[{res.vertex_paths[i].range_vertex, res.vertex_paths[i].edges}] = i;

  res.graph.n_vertices = static_cast<Id>(res.vertex_paths.size());
  for (Id i = 0; i < res.graph.n_vertices; ++i) {
    const graph_path& p = res.vertex_paths[i];
    std::string label = p.edges.empty() ? g.vertex_name(p.range_vertex) : "";
    for (Id e : p.edges) label += g.edge_name(e);
    res.graph.vertex_names.push_back(label);
    if (p.edges.empty()) continue;
    graph_path parent = p;
    parent.edges.pop_back();
    const Id pid = index.at({parent.range_vertex, parent.edges});
    res.graph.esrc.push_back(i);
    res.graph.erng.push_back(pid);
  }
  return res;
}

graph_action induced_forest_action(const selfsim_automaton& a, int depth, int max_classes) {
  const forest_result forest = path_forest(a.graph, depth);
  const Id np = static_cast<Id>(forest.vertex_paths.size());

  std::map<std::pair<Id, std::vector<Id>>, Id> path_index;
  for (Id i = 0; i < np; ++i)
    path_index[{forest.vertex_paths[i].range_vertex, forest.vertex_paths[i].edges}] = i;

  // A class is the table of a word on forest vertices together with its
  // endpoints in the base vertex set.
  struct word_class {
    Id src, rng;
    std::vector<Id> table;  // defined exactly on paths with range == src
  };
  auto table_of = [&](const gen_word& w) {
    word_class c{w.src, w.rng, std::vector<Id>(np, undef)};
    for (Id i = 0; i < np; ++i) {
      if (forest.vertex_paths[i].range_vertex != w.src) continue;
      const graph_path q = act_word(a, w, forest.vertex_paths[i]).path;
      c.table[i] = path_index.at({q.range_vertex, q.edges});
    }
    return c;
  };

  std::vector<word_class> classes;
  std::vector<gen_word> witness_words;
  std::map<std::vector<Id>, Id> class_index;  // (src, rng, table) flattened
  auto key_of = [&](const word_class& c) {
    std::vector<Id> key = {c.src, c.rng};
    key.insert(key.end(), c.table.begin(), c.table.end());
    return key;
  };
  auto add_class = [&](const word_class& c, const gen_word& w) {
    const auto key = key_of(c);
    auto it = class_index.find(key);
    if (it != class_index.end()) return it->second;
    const Id id = static_cast<Id>(classes.size());
    if (id >= max_classes)
      throw precondition_error("induced_forest_action: class cap exceeded");
    class_index.emplace(key, id);
    classes.push_back(c);
    witness_words.push_back(w);
    return id;
  };

  for (Id v = 0; v < a.graph.n_vertices; ++v) add_class(table_of(unit_word(a, v)), unit_word(a, v));
  for (Id g = 0; g < a.n_generators(); ++g)
    for (int sign = +1; sign >= -1; sign -= 2) {
      const gen_word w = letter_word(a, sign * (g + 1));
      add_class(table_of(w), w);
    }

  // Close under composition.  The triangular sweep revisits every pair once
  // both members exist, even for classes appended mid-loop.
  auto compose_classes = [&](Id i, Id j) {
    // j after i
    if (classes[j].src != classes[i].rng) return;
    word_class c{classes[i].src, classes[j].rng, std::vector<Id>(np, undef)};
    for (Id x = 0; x < np; ++x)
      if (classes[i].table[x] != undef) c.table[x] = classes[j].table[classes[i].table[x]];
    add_class(c, concat_words(a, witness_words[j], witness_words[i]));
  };
  for (Id i = 0; i < static_cast<Id>(classes.size()); ++i)
    for (Id j = 0; j <= i; ++j) {
      compose_classes(i, j);
      compose_classes(j, i);
    }

  const Id narrows = static_cast<Id>(classes.size());
  graph_action out;
  out.graph = forest.graph;
  out.gpd.n_units = a.graph.n_vertices;
  out.gpd.src.resize(narrows);
  out.gpd.rng.resize(narrows);
  out.gpd.inv.resize(narrows);
  out.gpd.comp.assign(static_cast<std::size_t>(narrows) * narrows, undef);
  out.gpd.unit_arrow.assign(a.graph.n_vertices, undef);
  for (Id i = 0; i < narrows; ++i) {
    out.gpd.src[i] = classes[i].src;
    out.gpd.rng[i] = classes[i].rng;
    if (i < a.graph.n_vertices) out.gpd.unit_arrow[i] = i;  // units were added first
  }
  for (Id i = 0; i < narrows; ++i) {
    // inverse table
    word_class c{classes[i].rng, classes[i].src, std::vector<Id>(np, undef)};
    for (Id x = 0; x < np; ++x)
      if (classes[i].table[x] != undef) c.table[classes[i].table[x]] = x;
    const auto it = class_index.find(key_of(c));
    if (it == class_index.end())
      throw internal_consistency_error("induced_forest_action: inverse class missing");
    out.gpd.inv[i] = it->second;
  }
  for (Id i = 0; i < narrows; ++i)
    for (Id j = 0; j < narrows; ++j) {
      if (classes[j].rng != classes[i].src) continue;  // i after j
      word_class c{classes[j].src, classes[i].rng, std::vector<Id>(np, undef)};
      for (Id x = 0; x < np; ++x)
        if (classes[j].table[x] != undef) c.table[x] = classes[i].table[classes[j].table[x]];
      const auto it = class_index.find(key_of(c));
      if (it == class_index.end())
        throw internal_consistency_error("induced_forest_action: composition class missing");
      out.gpd.comp_at(i, j) = it->second;
    }

  out.vertex_anchor.resize(np);
  for (Id x = 0; x < np; ++x) out.vertex_anchor[x] = forest.vertex_paths[x].range_vertex;
  out.vertex_act.assign(narrows, std::vector<Id>(np, undef));
  for (Id i = 0; i < narrows; ++i) out.vertex_act[i] = classes[i].table;

  // Forest edge (mu e -> mu) maps to (f(mu e) -> f(mu)); each child path has
  // one outgoing edge.
  std::vector<Id> edge_of_child(np, undef);
  for (Id e = 0; e < forest.graph.n_edges(); ++e) edge_of_child[forest.graph.esrc[e]] = e;
  out.edge_act.assign(narrows, std::vector<Id>(forest.graph.n_edges(), undef));
  for (Id i = 0; i < narrows; ++i)
    for (Id e = 0; e < forest.graph.n_edges(); ++e) {
      const Id child = forest.graph.esrc[e];
      const Id fchild = classes[i].table[child];
      if (fchild == undef) continue;
      const Id fparent = classes[i].table[forest.graph.erng[e]];
      if (fparent == undef || edge_of_child[fchild] == undef ||
          forest.graph.erng[edge_of_child[fchild]] != fparent)
        throw internal_consistency_error("induced_forest_action: image not forest-compatible");
      out.edge_act[i][e] = edge_of_child[fchild];
    }
  return out;
}

}  // namespace orbigraph
