#include <gtest/gtest.h>

#include <random>

#include "orbigraph/fixtures.hpp"
#include "orbigraph/snf.hpp"
#include "orbigraph/spectrum.hpp"
#include "test_support.hpp"

using namespace orbigraph;

namespace {

big_matrix from_rows(const std::vector<std::vector<long long>>& rows) {
  big_matrix m(static_cast<int>(rows.size()),
               rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

void expect_certified(const big_matrix& m, const snf_result& r) {
  const big_matrix lhs = mat_mul(mat_mul(r.u, m), r.v);
  ASSERT_EQ(lhs.rows, r.s.rows);
  ASSERT_EQ(lhs.cols, r.s.cols);
  for (int i = 0; i < lhs.rows; ++i)
    for (int j = 0; j < lhs.cols; ++j) {
      EXPECT_EQ(lhs.at(i, j), r.s.at(i, j));
      if (i != j) EXPECT_EQ(r.s.at(i, j), 0);
    }
  for (std::size_t k = 1; k < r.diagonal.size(); ++k) {
    EXPECT_GT(r.diagonal[k - 1], 0);
    EXPECT_EQ(r.diagonal[k] % r.diagonal[k - 1], 0);
  }
}

}  // namespace

TEST(Smith, SmallExamples) {
  const auto one = smith_normal_form(from_rows({{-2}}));
  EXPECT_EQ(one.diagonal, (std::vector<bigint>{2}));
  EXPECT_EQ(one.rank, 1);

  const auto id = smith_normal_form(identity_matrix(3));
  EXPECT_EQ(id.diagonal, (std::vector<bigint>{1, 1, 1}));

  const auto zero = smith_normal_form(big_matrix(2, 3));
  EXPECT_TRUE(zero.diagonal.empty());
  EXPECT_EQ(zero.rank, 0);

  // classic divisibility repair case
  const auto d = smith_normal_form(from_rows({{2, 0}, {0, 3}}));
  EXPECT_EQ(d.diagonal, (std::vector<bigint>{1, 6}));

  const auto r = smith_normal_form(from_rows({{6, 4}, {4, 6}}));
  EXPECT_EQ(r.diagonal, (std::vector<bigint>{2, 10}));
}

TEST(Smith, RandomMatricesCertify) {
  orbitest::rng_t rng(0x51f7u);
  std::uniform_int_distribution<int> dim(1, 12), val(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    big_matrix m(dim(rng), dim(rng));
    for (auto& x : m.a) x = val(rng);
    const auto r = smith_normal_form(m);
    expect_certified(m, r);
    EXPECT_EQ(r.rank, static_cast<int>(r.diagonal.size()));
  }
}

TEST(Smith, CuntzPatternKTheory) {
  // single vertex with three loops
  const auto kt = graph_k_theory({{3}});
  EXPECT_EQ(kt.k0.rank, 0);
  EXPECT_EQ(kt.k0.torsion, (std::vector<bigint>{2}));
  EXPECT_EQ(kt.k1.rank, 0);
  EXPECT_TRUE(kt.k1.torsion.empty());
  EXPECT_EQ(invariants_to_string(kt.k0), "Z/2");
  EXPECT_EQ(invariants_to_string(kt.k1), "0");
}

TEST(Smith, QuotientOfLoopFixtureKTheory) {
  const auto rep = quotient_graph(two_vertex_loop_action(), quotient_mode::fast);
  const auto kt = graph_k_theory(rep.adjacency);
  EXPECT_EQ(kt.k0.rank, 1);
  EXPECT_TRUE(kt.k0.torsion.empty());
  EXPECT_EQ(kt.k1.rank, 1);
  EXPECT_TRUE(kt.k1.torsion.empty());
  EXPECT_EQ(invariants_to_string(kt.k0), "Z");
  EXPECT_EQ(invariants_to_string(kt.k1), "Z");
}

TEST(Smith, KTheoryRejectsSources) {
  // vertex 1 receives nothing
  EXPECT_THROW(graph_k_theory({{1, 1}, {0, 0}}), precondition_error);
  EXPECT_THROW(graph_k_theory({}), precondition_error);
  EXPECT_THROW(graph_k_theory({{-1}}), malformed_input_error);
}

TEST(Smith, InvariantStrings) {
  abelian_invariants g;
  EXPECT_EQ(invariants_to_string(g), "0");
  g.rank = 2;
  EXPECT_EQ(invariants_to_string(g), "Z^2");
  g.torsion = {2, 6};
  EXPECT_EQ(invariants_to_string(g), "Z^2 + Z/2 + Z/6");
  g.rank = 1;
  EXPECT_EQ(invariants_to_string(g), "Z + Z/2 + Z/6");
}

TEST(Smith, LargePipelineEntries) {
  // matrices engineered to force large intermediate entries
  big_matrix m(4, 4);
  const long long rows[4][4] = {{2, 4, 4, 6},
                                {6, 6, 12, 12},
                                {10, 4, 16, 14},
                                {16, 4, 22, 20}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m.at(i, j) = rows[i][j];
  const auto r = smith_normal_form(m);
  expect_certified(m, r);
}
