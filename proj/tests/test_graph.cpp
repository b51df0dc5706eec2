#include <gtest/gtest.h>

#include "orbigraph/fixtures.hpp"
#include "orbigraph/graph.hpp"
#include "test_support.hpp"

using namespace orbigraph;

TEST(Graph, SourcesAndSinks) {
  directed_graph g;
  g.n_vertices = 3;
  g.esrc = {0, 1};
  g.erng = {1, 2};  // 0 receives nothing, 2 emits nothing
  EXPECT_TRUE(validate_graph(g).ok());
  EXPECT_TRUE(has_sources(g));
  EXPECT_TRUE(has_sinks(g));

  const directed_graph e = four_edge_selfsim().graph;
  EXPECT_FALSE(has_sources(e));
  EXPECT_FALSE(has_sinks(e));
}

TEST(Graph, ValidateCatchesDanglingEndpoint) {
  directed_graph g;
  g.n_vertices = 2;
  g.esrc = {0, 3};
  g.erng = {1, 0};
  EXPECT_THROW(validate_graph(g), malformed_input_error);
}

TEST(Graph, PathBasics) {
  const directed_graph e = four_edge_selfsim().graph;  // a:v<-v b:w<-v c:w<-v d:v<-w
  const Id a = 0, b = 1, d = 3;

  graph_path p{e.erng[a], {a, d}};  // "ad": range v, source w
  EXPECT_TRUE(path_ok(e, p));
  EXPECT_EQ(path_source(e, p), 1);
  EXPECT_EQ(p.length(), 2);

  graph_path q{e.erng[b], {b}};  // "b": w <- v
  EXPECT_TRUE(path_ok(e, q));
  const graph_path pq = concat_paths(e, p, q);  // "adb"
  EXPECT_EQ(pq.edges, (std::vector<Id>{a, d, b}));
  EXPECT_EQ(pq.range_vertex, 0);
  EXPECT_THROW(concat_paths(e, p, p), precondition_error);  // s(p)=w, r(p)=v

  graph_path bad{e.erng[a], {a, b}};  // src(a)=v but rng(b)=w
  EXPECT_FALSE(path_ok(e, bad));
}

TEST(Graph, PathEnumerationOrderAndCount) {
  const directed_graph e = four_edge_selfsim().graph;
  const auto all = paths_up_to(e, {0, 1}, 2);
  // lengths 0,1,2; v has in-edges {a,d}, w has {b,c}; every vertex has
  // in-degree 2, so 2 + 4 + 8 paths
  ASSERT_EQ(all.size(), 14u);
  for (std::size_t i = 0; i + 1 < all.size(); ++i) {
    const auto &x = all[i], &y = all[i + 1];
    const bool ordered =
        x.length() < y.length() || (x.length() == y.length() && x.edges <= y.edges);
    EXPECT_TRUE(ordered) << "position " << i;
  }
  EXPECT_EQ(all[0], (graph_path{0, {}}));
  EXPECT_EQ(all[1], (graph_path{1, {}}));
  EXPECT_EQ(all[2], (graph_path{0, {0}}));

  // restricting the range fibre
  const auto over_v = paths_up_to(e, {0}, 2);
  EXPECT_EQ(over_v.size(), 7u);
  for (const auto& p : over_v) EXPECT_EQ(p.range_vertex, 0);
}

TEST(Graph, PathEnumerationRespectsEdgeMask) {
  const directed_graph e = four_edge_selfsim().graph;
  std::vector<bool> only_a(4, false);
  only_a[0] = true;
  const auto all = paths_up_to(e, {0}, 3, only_a);
  ASSERT_EQ(all.size(), 4u);  // empty, a, aa, aaa
  EXPECT_EQ(all[3].edges, (std::vector<Id>{0, 0, 0}));
}

TEST(Graph, DotOutputDeterministic) {
  const directed_graph e = four_edge_selfsim().graph;
  const std::string d1 = graph_to_dot(e, "base");
  const std::string d2 = graph_to_dot(e, "base");
  EXPECT_EQ(d1, d2);
  EXPECT_NE(d1.find("digraph"), std::string::npos);
  EXPECT_NE(d1.find("\"a\""), std::string::npos);
}
