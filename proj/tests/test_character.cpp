#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>

#include "orbigraph/character.hpp"
#include "test_support.hpp"

using namespace orbigraph;

namespace {

constexpr double kTol = 1e-9;

void expect_near(cplx got, cplx want, double tol = kTol) {
  EXPECT_NEAR(got.real(), want.real(), tol);
  EXPECT_NEAR(got.imag(), want.imag(), tol);
}

}  // namespace

TEST(Character, SymmetricGroupThreeTable) {
  const finite_group s3 = symmetric_group(3);
  const auto classes = conjugacy_classes(s3);
  ASSERT_EQ(classes.size(), 3u);
  EXPECT_EQ(classes[0].elements.size(), 1u);  // identity
  // class sizes {1, 3, 2}
  std::vector<std::size_t> sizes = {classes[0].elements.size(), classes[1].elements.size(),
                                    classes[2].elements.size()};
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 2, 3}));

  const character_table& t = get_character_table(s3);
  ASSERT_EQ(t.n_irreps(), 3);
  EXPECT_EQ(t.degrees, (std::vector<int>{1, 1, 2}));
  // row 0 is trivial
  for (int c = 0; c < 3; ++c) expect_near(t.rows[0][c], 1.0);
  // the sign character is -1 on transpositions, +1 on 3-cycles
  int transpositions = -1, threecycles = -1;
  for (int c = 0; c < 3; ++c) {
    if (t.classes[c].elements.size() == 3) transpositions = c;
    if (t.classes[c].elements.size() == 2) threecycles = c;
  }
  expect_near(t.rows[1][transpositions], -1.0);
  expect_near(t.rows[1][threecycles], 1.0);
  expect_near(t.rows[2][0], 2.0);
  expect_near(t.rows[2][transpositions], 0.0);
  expect_near(t.rows[2][threecycles], -1.0);
}

TEST(Character, CyclicFourHasFourthRoots) {
  const character_table& t = get_character_table(cyclic_group(4));
  ASSERT_EQ(t.n_irreps(), 4);
  for (int r = 0; r < 4; ++r) {
    EXPECT_EQ(t.degrees[r], 1);
    // each row is a homomorphism into the fourth roots of unity
    const cplx z = t.value(r, 1);
    expect_near(z * z, t.value(r, 2), 1e-7);
    expect_near(std::abs(z), 1.0, 1e-7);
  }
  // some row must contain a genuinely imaginary value
  bool imaginary = false;
  for (int r = 0; r < 4; ++r) imaginary = imaginary || std::abs(t.value(r, 1).imag()) > 0.5;
  EXPECT_TRUE(imaginary);
}

TEST(Character, KleinFourAllDegreeOne) {
  const character_table& t =
      get_character_table(direct_product(cyclic_group(2), cyclic_group(2)));
  ASSERT_EQ(t.n_irreps(), 4);
  for (int r = 0; r < 4; ++r) EXPECT_EQ(t.degrees[r], 1);
}

TEST(Character, RowOrthogonality) {
  for (int gi = 0; gi < 5; ++gi) {
    const finite_group k = orbitest::isotropy_pool(gi);
    const character_table& t = get_character_table(k);
    ASSERT_EQ(t.n_irreps(), t.n_classes());
    for (int r1 = 0; r1 < t.n_irreps(); ++r1)
      for (int r2 = 0; r2 < t.n_irreps(); ++r2) {
        cplx acc = 0;
        for (int c = 0; c < t.n_classes(); ++c)
          acc += std::conj(t.rows[r1][c]) * t.rows[r2][c] *
                 static_cast<double>(t.classes[c].elements.size());
        expect_near(acc / static_cast<double>(k.order()), r1 == r2 ? 1.0 : 0.0, 1e-6);
      }
  }
}

TEST(Character, MemoizedTableIsStable) {
  const finite_group s3 = symmetric_group(3);
  const character_table& t1 = get_character_table(s3);
  const character_table& t2 = get_character_table(s3);
  EXPECT_EQ(&t1, &t2);  // same cached instance
}

TEST(Character, DecomposeAndHom) {
  const finite_group s3 = symmetric_group(3);
  const character_table& t = get_character_table(s3);
  // regular character = sum of deg * irrep
  class_function reg(t.n_classes(), 0.0);
  reg[0] = 6.0;
  const auto mult = decompose_character(t, reg);
  ASSERT_EQ(mult.size(), 3u);
  for (int r = 0; r < 3; ++r) EXPECT_EQ(mult[r], t.degrees[r]);
  EXPECT_EQ(hom_multiplicity(t, reg, reg), 1 + 1 + 4);

  // non-characters are rejected
  class_function virt = t.rows[0];
  for (auto& v : virt) v = -v;
  EXPECT_THROW(decompose_character(t, virt), precondition_error);
  class_function frac = t.rows[0];
  frac[0] += 0.5;
  EXPECT_THROW(decompose_character(t, frac), precondition_error);
}

TEST(Character, TensorOfStandardSquare) {
  const finite_group s3 = symmetric_group(3);
  const character_table& t = get_character_table(s3);
  // std tensor std = trivial + sign + std
  const class_function sq = tensor_character(t, t.rows[2], t.rows[2]);
  const auto mult = decompose_character(t, sq);
  EXPECT_EQ(mult, (std::vector<long>{1, 1, 1}));
}

TEST(Character, PermutationCharacterOfNaturalAction) {
  const finite_group s3 = symmetric_group(3);
  const character_table& t = get_character_table(s3);
  // natural action on 3 letters: regenerate one-line forms
  std::vector<std::vector<Id>> perms;
  std::vector<Id> base = {0, 1, 2};
  do {
    perms.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  const class_function nat = permutation_character(t, perms);
  expect_near(nat[0], 3.0);
  const auto mult = decompose_character(t, nat);
  EXPECT_EQ(mult, (std::vector<long>{1, 0, 1}));  // trivial + standard
}

TEST(Character, RestrictionToSubgroup) {
  const finite_group s3 = symmetric_group(3);
  const character_table& t = get_character_table(s3);
  // A copy of Z/2 inside S3: identity and one transposition.
  const auto subs = all_subgroups(s3);
  std::vector<Id> z2;
  for (const auto& s : subs)
    if (s.size() == 2) {
      z2 = s;
      break;
    }
  ASSERT_EQ(z2.size(), 2u);
  const embedded_subgroup sub = make_subgroup(s3, z2);
  const character_table& st = get_character_table(sub.group);
  // standard restricted to Z/2 has character (2, 0) = trivial + sign
  const class_function res =
      restrict_character(s3, t, t.rows[2], sub.group, st, sub.into_parent);
  const auto mult = decompose_character(st, res);
  EXPECT_EQ(mult, (std::vector<long>{1, 1}));

  // broken embeddings are rejected
  std::vector<Id> wrong = sub.into_parent;
  wrong[1] = 0;  // not injective
  EXPECT_THROW(restrict_character(s3, t, t.rows[2], sub.group, st, wrong),
               precondition_error);
}

TEST(Character, LargerTableCertifies) {
  // exercises the eigen route beyond the pool: S4 with 5 classes
  const character_table& t = get_character_table(symmetric_group(4));
  ASSERT_EQ(t.n_irreps(), 5);
  std::vector<int> degs = t.degrees;
  std::sort(degs.begin(), degs.end());
  EXPECT_EQ(degs, (std::vector<int>{1, 1, 2, 3, 3}));
  long long sq = 0;
  for (int d : t.degrees) sq += d * d;
  EXPECT_EQ(sq, 24);
}
