#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "orbigraph/fixtures.hpp"
#include "orbigraph/selfsim.hpp"
#include "test_support.hpp"

using namespace orbigraph;

namespace {

graph_path mk(Id range, std::vector<Id> edges) {
  graph_path p;
  p.range_vertex = range;
  p.edges = std::move(edges);
  return p;
}

// All words of length <= len with the given source vertex, built by
// prepending composable letters.
std::vector<gen_word> words_from(const selfsim_automaton& a, Id src, int len) {
  std::vector<gen_word> out = {unit_word(a, src)};
  std::size_t lo = 0;
  for (int l = 0; l < len; ++l) {
    const std::size_t hi = out.size();
    for (std::size_t i = lo; i < hi; ++i)
      for (Id g = 0; g < a.n_generators(); ++g)
        for (int sgn : {1, -1}) {
          const gen_word lw = letter_word(a, sgn * static_cast<int>(g + 1));
          if (lw.src == out[i].rng) out.push_back(concat_words(a, lw, out[i]));
        }
    lo = hi;
  }
  return out;
}

}  // namespace

TEST(SelfSim, FixtureValidates) {
  const selfsim_automaton a = four_edge_selfsim();
  EXPECT_TRUE(validate_selfsim(a).ok());
  EXPECT_EQ(a.n_generators(), 2);
  EXPECT_EQ(a.gen_name(0), "g");
  EXPECT_EQ(a.gen_name(1), "h");
  EXPECT_EQ(a.graph.n_vertices, 2);
  EXPECT_EQ(a.graph.n_edges(), 4);

  selfsim_automaton anon = a;
  anon.gen_names.clear();
  EXPECT_EQ(anon.gen_name(1), "g1");
}

TEST(SelfSim, ValidateCatchesBrokenTransitions) {
  selfsim_automaton a = four_edge_selfsim();
  a.out_edge[0][0] = 1;  // g.a = g.d = b: no longer a bijection onto the fibre
  EXPECT_FALSE(validate_selfsim(a).ok());

  selfsim_automaton b = four_edge_selfsim();
  b.restriction[0][0] = letter_word(b, 1);  // wrong range for the subtree under a
  EXPECT_FALSE(validate_selfsim(b).ok());
}

TEST(SelfSim, WordOperations) {
  const selfsim_automaton a = four_edge_selfsim();
  const gen_word g = letter_word(a, 1);
  EXPECT_EQ(g.src, 0);
  EXPECT_EQ(g.rng, 1);
  const gen_word hinv = letter_word(a, -2);
  EXPECT_EQ(hinv.src, 0);
  EXPECT_EQ(hinv.rng, 1);

  const gen_word h = letter_word(a, 2);
  const gen_word gh = concat_words(a, g, h);  // h acts first: w -> w
  EXPECT_EQ(gh.src, 1);
  EXPECT_EQ(gh.rng, 1);
  EXPECT_EQ(gh.letters, (std::vector<int>{1, 2}));
  EXPECT_EQ(concat_words(a, gh, unit_word(a, 1)), gh);

  const gen_word inv = invert_word(gh);
  EXPECT_EQ(inv.letters, (std::vector<int>{-2, -1}));
  EXPECT_EQ(inv.src, 1);
  EXPECT_EQ(inv.rng, 1);

  EXPECT_THROW(concat_words(a, g, g), precondition_error);  // src(g) != rng(g)
}

TEST(SelfSim, DefiningTransitions) {
  const selfsim_automaton a = four_edge_selfsim();
  // g.a = c, g.d = b, h.b = a, h.c = d with the fixture's restrictions
  const auto ga = act_word(a, letter_word(a, 1), mk(0, {0}));
  EXPECT_EQ(ga.path, mk(1, {2}));
  EXPECT_EQ(ga.restriction, unit_word(a, 0));
  const auto gd = act_word(a, letter_word(a, 1), mk(0, {3}));
  EXPECT_EQ(gd.path, mk(1, {1}));
  EXPECT_EQ(gd.restriction, letter_word(a, 2));
  const auto hb = act_word(a, letter_word(a, 2), mk(1, {1}));
  EXPECT_EQ(hb.path, mk(0, {0}));
  const auto hc = act_word(a, letter_word(a, 2), mk(1, {2}));
  EXPECT_EQ(hc.path, mk(0, {3}));
  EXPECT_EQ(hc.restriction, letter_word(a, 1));

  // inverse letters invert the edge bijection
  const auto back = act_word(a, letter_word(a, -1), mk(1, {2}));
  EXPECT_EQ(back.path, mk(0, {0}));

  // acting on a path outside the source fibre is rejected
  EXPECT_THROW(act_word(a, letter_word(a, 1), mk(1, {1})), precondition_error);
}

TEST(SelfSim, RecursionRelationsOnDeepPaths) {
  const selfsim_automaton a = four_edge_selfsim();
  const gen_word g = letter_word(a, 1), h = letter_word(a, 2);
  const graph_path pa = mk(0, {0}), pb = mk(1, {1}), pc = mk(1, {2}), pd = mk(0, {3});
  // g.(a mu) = c mu
  for (const graph_path& mu : paths_up_to(a.graph, {0}, 3)) {
    const auto got = act_word(a, g, concat_paths(a.graph, pa, mu));
    EXPECT_EQ(got.path, concat_paths(a.graph, pc, mu));
  }
  // g.(d mu) = b (h.mu)
  for (const graph_path& mu : paths_up_to(a.graph, {1}, 3)) {
    const auto got = act_word(a, g, concat_paths(a.graph, pd, mu));
    EXPECT_EQ(got.path, concat_paths(a.graph, pb, act_word(a, h, mu).path));
  }
  // h.(b mu) = a mu
  for (const graph_path& mu : paths_up_to(a.graph, {0}, 3)) {
    const auto got = act_word(a, h, concat_paths(a.graph, pb, mu));
    EXPECT_EQ(got.path, concat_paths(a.graph, pa, mu));
  }
  // h.(c mu) = d (g.mu)
  for (const graph_path& mu : paths_up_to(a.graph, {0}, 3)) {
    const auto got = act_word(a, h, concat_paths(a.graph, pc, mu));
    EXPECT_EQ(got.path, concat_paths(a.graph, pd, act_word(a, g, mu).path));
  }
}

TEST(SelfSim, RestrictionCocycle) {
  const selfsim_automaton a = four_edge_selfsim();
  for (Id x = 0; x < a.graph.n_vertices; ++x)
    for (const gen_word& w : words_from(a, x, 2))
      for (const graph_path& p : paths_up_to(a.graph, {w.src}, 3)) {
        const auto full = act_word(a, w, p);
        EXPECT_TRUE(path_ok(a.graph, full.path));
        EXPECT_EQ(full.path.length(), p.length());

        // the inverse word undoes the action
        const auto back = act_word(a, invert_word(w), full.path);
        EXPECT_EQ(back.path, p);

        // w.(mu nu) = (w.mu)(w|_mu . nu) and w|_(mu nu) = (w|_mu)|_nu
        for (int k = 0; k <= p.length(); ++k) {
          const graph_path mu = mk(p.range_vertex,
                                   {p.edges.begin(), p.edges.begin() + k});
          const graph_path nu = mk(path_source(a.graph, mu),
                                   {p.edges.begin() + k, p.edges.end()});
          const auto am = act_word(a, w, mu);
          const auto an = act_word(a, am.restriction, nu);
          EXPECT_EQ(full.path, concat_paths(a.graph, am.path, an.path));
          EXPECT_EQ(full.restriction, an.restriction);
        }
      }
}

TEST(SelfSim, OrbitOfLengthTwoPath) {
  const selfsim_automaton a = four_edge_selfsim();
  const graph_path ad = mk(0, {0, 3});
  const auto orbit = orbit_of_path(a, ad);
  ASSERT_EQ(orbit.size(), 8u);
  std::set<std::pair<Id, std::vector<Id>>> got;
  for (const auto& p : orbit) got.insert({p.range_vertex, p.edges});
  const std::set<std::pair<Id, std::vector<Id>>> want = {
      {0, {0, 0}}, {0, {0, 3}}, {0, {3, 1}}, {0, {3, 2}},
      {1, {1, 0}}, {1, {1, 3}}, {1, {2, 0}}, {1, {2, 3}}};
  EXPECT_EQ(got, want);  // all length-two paths form one orbit
  EXPECT_EQ(orbit.front(), ad);

  // bounded word length stops the search early
  const auto near = orbit_of_path(a, ad, 1);
  ASSERT_EQ(near.size(), 3u);
  EXPECT_EQ(near[1], mk(1, {2, 3}));
  EXPECT_EQ(near[2], mk(1, {1, 3}));
}

TEST(SelfSim, DepthBoundedEquivalence) {
  const selfsim_automaton a = four_edge_selfsim();
  // g and h^-1 share endpoints but differ already on single edges
  const auto diff = depth_bounded_equivalence(a, letter_word(a, 1), letter_word(a, -2), 3);
  EXPECT_FALSE(diff.equal);
  ASSERT_TRUE(diff.witness.has_value());
  EXPECT_EQ(*diff.witness, mk(0, {0}));

  // g^-1 g is the identity on the subtree under v
  const gen_word gg = concat_words(a, letter_word(a, -1), letter_word(a, 1));
  EXPECT_TRUE(depth_bounded_equivalence(a, gg, unit_word(a, 0), 4).equal);

  // (hg)^2 fixes depth one but shifts deeper levels
  const gen_word hg = concat_words(a, letter_word(a, 2), letter_word(a, 1));
  const gen_word hg2 = concat_words(a, hg, hg);
  EXPECT_TRUE(depth_bounded_equivalence(a, hg2, unit_word(a, 0), 1).equal);
  const auto deep = depth_bounded_equivalence(a, hg2, unit_word(a, 0), 2);
  EXPECT_FALSE(deep.equal);
  ASSERT_TRUE(deep.witness.has_value());
  EXPECT_EQ(*deep.witness, mk(0, {0, 0}));
}

TEST(SelfSim, PathForestShape) {
  const selfsim_automaton a = four_edge_selfsim();
  const forest_result f = path_forest(a.graph, 2);
  ASSERT_EQ(f.graph.n_vertices, 14);
  EXPECT_EQ(f.graph.n_edges(), 12);
  const std::vector<std::string> want = {"v",  "w",  "a",  "b",  "c",  "d",  "aa",
                                         "ad", "ba", "bd", "ca", "cd", "db", "dc"};
  EXPECT_EQ(f.graph.vertex_names, want);
  // every non-root points to the path with its last edge dropped
  for (Id e = 0; e < f.graph.n_edges(); ++e) {
    const graph_path& child = f.vertex_paths[f.graph.esrc[e]];
    const graph_path& parent = f.vertex_paths[f.graph.erng[e]];
    ASSERT_GE(child.length(), 1);
    EXPECT_EQ(parent.range_vertex, child.range_vertex);
    EXPECT_EQ(parent.edges,
              std::vector<Id>(child.edges.begin(), child.edges.end() - 1));
  }
}

TEST(SelfSim, InducedForestAction) {
  const selfsim_automaton a = four_edge_selfsim();
  const graph_action fa = induced_forest_action(a, 2);
  EXPECT_TRUE(validate_graph_action(fa).ok());

  const auto orbs = orbits(fa.vertex_action());
  ASSERT_EQ(orbs.size(), 3u);  // one orbit per level
  EXPECT_EQ(orbs[0].size(), 2u);
  EXPECT_EQ(orbs[1].size(), 4u);
  EXPECT_EQ(orbs[2].size(), 8u);

  // the level-two orbit is the orbit of the path labelled "ad"
  const auto& names = fa.graph.vertex_names;
  const auto it = std::find(names.begin(), names.end(), "ad");
  ASSERT_NE(it, names.end());
  const Id vid = static_cast<Id>(it - names.begin());
  EXPECT_NE(std::find(orbs[2].begin(), orbs[2].end(), vid), orbs[2].end());
}
