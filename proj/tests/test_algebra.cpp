#include <gtest/gtest.h>

#include "orbigraph/correspondence.hpp"
#include "orbigraph/fixtures.hpp"
#include "orbigraph/star_algebra.hpp"
#include "test_support.hpp"

using namespace orbigraph;

TEST(Algebra, GroupoidAlgebraOfS3) {
  const finite_groupoid g = build_transitive_groupoid(1, symmetric_group(3));
  const fd_star_algebra a = groupoid_algebra(g);
  EXPECT_EQ(a.dim, 6);
  EXPECT_TRUE(validate_star_algebra(a).ok());
  EXPECT_TRUE(a.has_cancellation());
  EXPECT_EQ(a.unit_support, (std::vector<Id>{0}));

  // delta_g delta_h = delta_{gh}, delta_g* = delta_{g^-1}
  for (Id i = 0; i < 6; ++i) {
    EXPECT_EQ(a.star[i], g.inv[static_cast<std::size_t>(i)]);
    for (Id j = 0; j < 6; ++j) EXPECT_EQ(a.prod_at(i, j), g.compose(i, j));
  }
}

TEST(Algebra, ElementArithmetic) {
  const fd_star_algebra a = groupoid_algebra(build_transitive_groupoid(1, cyclic_group(3)));
  algebra_element x = alg_zero(a);
  x[1] = {0.0, 2.0};
  const algebra_element u = alg_unit(a);
  EXPECT_LT(alg_dist(alg_mul(a, u, x), x), 1e-12);
  EXPECT_LT(alg_dist(alg_mul(a, x, u), x), 1e-12);
  // (i 2 d_1)* = -i 2 d_2
  const algebra_element xs = alg_star(a, x);
  EXPECT_LT(std::abs(xs[2] - std::complex<double>(0.0, -2.0)), 1e-12);
  // x x* is positive on the unit coefficient
  const algebra_element p = alg_mul(a, x, xs);
  EXPECT_NEAR(p[0].real(), 4.0, 1e-12);
  EXPECT_NEAR(p[0].imag(), 0.0, 1e-12);
}

TEST(Algebra, ValidateCatchesBrokenStar) {
  fd_star_algebra a = groupoid_algebra(build_transitive_groupoid(1, cyclic_group(4)));
  a.star[1] = 2;  // no longer an involution compatible with prod
  const auto rep = validate_star_algebra(a);
  EXPECT_FALSE(rep.ok());
}

TEST(Algebra, VertexCrossedProductOfLoopFixture) {
  const graph_action a = two_vertex_loop_action();
  const auto vcp = vertex_crossed_product(a);
  EXPECT_TRUE(validate_star_algebra(vcp.alg).ok());
  // 24 arrows, anchors cover both vertices of the fibre over each unit
  EXPECT_EQ(vcp.alg.dim, vcp.ag.gpd.n_arrows());
  EXPECT_EQ(vcp.alg.dim, 24);
}

TEST(Algebra, CorrespondenceIdentitiesOnFixture) {
  const graph_action a = two_vertex_loop_action();
  const auto c = correspondence_crossed_product(a);
  EXPECT_EQ(c.mod.dim, 72);  // 24 arrows x 3 edges out of each range fibre vertex
  const auto rep = verify_correspondence(c);
  EXPECT_TRUE(rep.ok()) << (rep.violations.empty() ? "" : rep.violations[0].detail);
}

TEST(Algebra, CorrespondenceIdentitiesOnRandomInstances) {
  orbitest::rng_t rng(0xa1eb5u);
  for (int trial = 0; trial < 8; ++trial) {
    const graph_action a = orbitest::random_graph_action(rng, false);
    const auto c = correspondence_crossed_product(a);
    const auto rep = verify_correspondence(c);
    EXPECT_TRUE(rep.ok()) << "trial " << trial;
  }
}

TEST(Algebra, KappaCountsOnFixture) {
  const auto k = kappa_dimension_check(two_vertex_loop_action());
  EXPECT_TRUE(k.ok);
  EXPECT_EQ(k.lhs, 216);
  EXPECT_EQ(k.rhs, 216);
}

TEST(Algebra, KappaOnHandBuiltBouquet) {
  // one unit, Z/2, two loops swapped by the flip: rhs = 2 arrows * 2^2 = 8
  graph_action a;
  a.gpd = build_transitive_groupoid(1, cyclic_group(2));
  a.graph.n_vertices = 1;
  a.graph.esrc = {0, 0};
  a.graph.erng = {0, 0};
  a.graph.vertex_names = {"v"};
  a.graph.edge_names = {"p", "q"};
  a.vertex_anchor = {0};
  a.vertex_act = {{0}, {0}};
  a.edge_act = {{0, 1}, {1, 0}};
  ASSERT_TRUE(validate_graph_action(a).ok());
  const auto k = kappa_dimension_check(a);
  EXPECT_TRUE(k.ok);
  EXPECT_EQ(k.rhs, 8);
  EXPECT_EQ(k.lhs, k.rhs);
}

TEST(Algebra, KappaOnRandomInstances) {
  orbitest::rng_t rng(0xbeef1u);
  for (int trial = 0; trial < 8; ++trial) {
    const graph_action a = orbitest::random_graph_action(rng, false);
    const auto k = kappa_dimension_check(a);
    EXPECT_TRUE(k.ok) << "trial " << trial << ": " << k.lhs << " vs " << k.rhs;
  }
}
