#include <gtest/gtest.h>

#include "orbigraph/dr.hpp"
#include "orbigraph/fixtures.hpp"
#include "test_support.hpp"

using namespace orbigraph;

TEST(DoplicherRoberts, DiagonalOfLoopFixture) {
  const graph_action a = two_vertex_loop_action();
  const auto d = dr_dimension_table(a, 0, 3);
  ASSERT_EQ(d.size(), 4u);
  EXPECT_EQ(d[0][0], 1);
  EXPECT_EQ(d[1][1], 2);
  EXPECT_EQ(d[2][2], 14);
  EXPECT_EQ(d[3][3], 122);
  // symmetry of the full table
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) EXPECT_EQ(d[m][n], d[n][m]);
}

TEST(DoplicherRoberts, RankRouteAgreesOnSmallPowers) {
  const graph_action a = two_vertex_loop_action();
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) {
      const long burnside = intertwiner_dimension(a, 0, m, n);
      const long rank = intertwiner_dimension_rank(a, 0, m, n);
      EXPECT_EQ(burnside, rank) << "m=" << m << " n=" << n;
    }
}

TEST(DoplicherRoberts, BothFibersMatch) {
  const graph_action a = two_vertex_loop_action();
  const auto d0 = dr_dimension_table(a, 0, 3);
  const auto d1 = dr_dimension_table(a, 1, 3);
  EXPECT_EQ(d0, d1);
}

TEST(DoplicherRoberts, TrivialIsotropyCountsPathPairs) {
  // single vertex, two loops, trivial group: d[m][n] = 2^m * 2^n
  directed_graph g;
  g.n_vertices = 1;
  g.esrc = {0, 0};
  g.erng = {0, 0};
  const graph_action a = trivial_action_on(g);
  const auto d = dr_dimension_table(a, 0, 2);
  EXPECT_EQ(d[1][1], 4);
  EXPECT_EQ(d[2][2], 16);
  EXPECT_EQ(d[1][2], 8);
  EXPECT_EQ(intertwiner_dimension_rank(a, 0, 2, 2), 16);
}

TEST(DoplicherRoberts, CoreBratteliFromQuotient) {
  const auto rep = quotient_graph(two_vertex_loop_action(), quotient_mode::fast);
  const auto d = core_bratteli(rep, 3);
  ASSERT_EQ(d.levels.size(), 4u);
  EXPECT_EQ(d.levels[0].dims, (std::vector<long long>{1, 1, 1}));
  // each step multiplies by the adjacency transpose
  const std::vector<long long> l1 = {2, 2, 4};
  EXPECT_EQ(d.levels[1].dims, l1);
  ASSERT_EQ(d.edges.size(), 3u);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      EXPECT_EQ(d.edges[0][i][j], rep.adjacency[j][i]);
}

TEST(DoplicherRoberts, FiberBratteliOfLoopFixture) {
  const graph_action a = two_vertex_loop_action();
  const auto d = core_bratteli_dr_fiber(a, 0, 3);
  ASSERT_EQ(d.levels.size(), 4u);
  // level 0 is the trivial isotropy representation
  EXPECT_EQ(d.levels[0].dims, (std::vector<long long>{1}));
  EXPECT_EQ(d.levels[1].dims, (std::vector<long long>{1, 1}));
  EXPECT_EQ(d.levels[2].dims, (std::vector<long long>{2, 1, 3}));
  EXPECT_EQ(d.levels[3].dims, (std::vector<long long>{5, 4, 9}));
  // total dimension at level k is 3^k: sum over vertices of dim * degree
  // degrees recoverable from labels "pi<i>.d<deg>"
  for (std::size_t k = 0; k < d.levels.size(); ++k) {
    long long total = 0;
    for (std::size_t i = 0; i < d.levels[k].dims.size(); ++i) {
      const std::string& lab = d.levels[k].labels[i];
      const auto dot = lab.rfind(".d");
      ASSERT_NE(dot, std::string::npos);
      total += d.levels[k].dims[i] * std::stoll(lab.substr(dot + 2));
    }
    long long want = 1;
    for (std::size_t j = 0; j < k; ++j) want *= 3;
    EXPECT_EQ(total, want) << "level " << k;
  }
}

TEST(DoplicherRoberts, FiberBratteliRejectsWideFibers) {
  // two vertices in one fibre
  directed_graph g;
  g.n_vertices = 2;
  g.esrc = {0, 1};
  g.erng = {1, 0};
  const graph_action a = trivial_action_on(g);
  EXPECT_THROW(core_bratteli_dr_fiber(a, 0, 2), precondition_error);
}

TEST(DoplicherRoberts, BratteliDotDeterministic) {
  const auto rep = quotient_graph(two_vertex_loop_action(), quotient_mode::fast);
  const auto d = core_bratteli(rep, 2);
  EXPECT_EQ(bratteli_to_dot(d, "b"), bratteli_to_dot(d, "b"));
  EXPECT_NE(bratteli_to_dot(d, "b").find("digraph"), std::string::npos);
}

TEST(DoplicherRoberts, RandomInstancesBurnsideMatchesRank) {
  orbitest::rng_t rng(0xd4u);
  int checked = 0;
  for (int trial = 0; trial < 6; ++trial) {
    const graph_action a = orbitest::random_graph_action(rng, false);
    for (Id v = 0; v < a.graph.n_vertices && checked < 12; ++v) {
      // keep the rank matrices small: skip large fibres
      const auto fib = fiber_graph(a, a.vertex_anchor[static_cast<std::size_t>(v)]);
      if (fib.graph.n_edges() > 4) continue;
      EXPECT_EQ(intertwiner_dimension(a, v, 1, 1), intertwiner_dimension_rank(a, v, 1, 1));
      EXPECT_EQ(intertwiner_dimension(a, v, 1, 2), intertwiner_dimension_rank(a, v, 1, 2));
      ++checked;
    }
  }
  EXPECT_GT(checked, 0);
}
