#include <gtest/gtest.h>

#include "akh/schur.hpp"
#include "test_util.hpp"

using namespace akh;
using akh::testing::generic;
using akh::testing::params;

TEST(Census, OmegaIsTheRegularModule) {
  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= 3; ++n)
      EXPECT_EQ(permutation_module_census(canonical(omega_weight(r, n)), r).dim, ipow(r, n) * factorial(n));
}

TEST(Census, TypeAPermutationModules) {
  // dim M^μ = n!/∏μ_i! in type A.
  for (const auto& mu : enumerate_multicompositions(1, 4)) {
    long long want = factorial(4);
    for (int x : mu[0]) want /= factorial(x);
    EXPECT_EQ(permutation_module_census(mu, 1).dim, want) << shape_str(mu);
  }
}

TEST(Census, RankOfPermutationModules) {
  for (const auto& p : {generic(2, 3, 41), params<Rational>(2, Rational(-1), {Rational(1), Rational(1)})}) {
    HeckeAlgebra<Rational> alg(p, 3);
    for (const auto& mu : enumerate_multicompositions(2, 3)) {
      PermutationModule<Rational> pm(alg, mu);
      EXPECT_EQ(pm.dim(), permutation_module_census(mu, 2).dim) << shape_str(mu);
    }
  }
}

TEST(Census, PermutationModuleActionIsARepresentation) {
  auto p = params<Rational>(2, Rational(-1), {Rational(1), Rational(-1)});
  HeckeAlgebra<Rational> alg(p, 3);
  PermutationModule<Rational> pm(alg, {{1}, {2}});
  std::vector<Matrix<Rational>> gens;
  for (int i = 0; i < 3; ++i) gens.push_back(pm.action(i));
  std::string why;
  EXPECT_TRUE(relations_hold(gens, p, &why)) << why;
}

TEST(SchurAlgebra, Dimension) {
  EXPECT_EQ(schur_dimension(enumerate_multicompositions(1, 2), 1, 2), 10);
  EXPECT_EQ(schur_dimension(enumerate_multicompositions(2, 2), 2, 2), 210);
  EXPECT_TRUE(is_saturated(enumerate_multicompositions(2, 3), 2, 3));
  EXPECT_FALSE(is_saturated({{{1}, {1}}}, 2, 2));
}

TEST(Decomposition, TypeAQMinusOne) {
  HeckeAlgebra<Rational> alg(params<Rational>(1, Rational(-1), {Rational(1)}), 2);
  MurphyBasis<Rational> mb(alg);
  WeylModules<Rational> wm(mb);
  auto d = decomposition_matrix(wm, enumerate_multicompositions(1, 2));
  EXPECT_EQ(d.rows, (std::vector<Multipartition>{{{1, 1}}, {{2}}}));
  EXPECT_EQ(d.entries, (std::vector<std::vector<int>>{{1, 0}, {1, 1}}));
}

TEST(Decomposition, TypeAN3) {
  // q-Schur algebra S(3,3) at e = 2: [W^(3) : L^(1³)] = 1, (2,1) is projective.
  HeckeAlgebra<Rational> alg(params<Rational>(1, Rational(-1), {Rational(1)}), 3);
  MurphyBasis<Rational> mb(alg);
  WeylModules<Rational> wm(mb);
  auto d = decomposition_matrix(wm, enumerate_multicompositions(1, 3));
  EXPECT_EQ(d.rows, (std::vector<Multipartition>{{{1, 1, 1}}, {{2, 1}}, {{3}}}));
  EXPECT_EQ(d.entries, (std::vector<std::vector<int>>{{1, 0, 0}, {0, 1, 0}, {1, 0, 1}}));
  ASSERT_TRUE(d.has_hecke);
  EXPECT_EQ(d.hecke_cols, (std::vector<Multipartition>{{{1, 1, 1}}, {{2, 1}}}));
}

TEST(Decomposition, GenericIsIdentity) {
  HeckeAlgebra<Rational> alg(generic(2, 2, 42), 2);
  MurphyBasis<Rational> mb(alg);
  WeylModules<Rational> wm(mb);
  auto d = decomposition_matrix(wm, enumerate_multicompositions(2, 2));
  for (std::size_t a = 0; a < d.rows.size(); ++a)
    for (std::size_t b = 0; b < d.cols.size(); ++b) EXPECT_EQ(d.entries[a][b], a == b ? 1 : 0);
}

TEST(Decomposition, LinkageMatchesResidues) {
  auto p = params<Rational>(2, Rational(-1), {Rational(1), Rational(-1)});
  HeckeAlgebra<Rational> alg(p, 2);
  MurphyBasis<Rational> mb(alg);
  WeylModules<Rational> wm(mb);
  auto link = selftest::as_partition(linkage_classes(decomposition_matrix(wm, enumerate_multicompositions(2, 2))));
  EXPECT_EQ(link, selftest::as_partition(residue_blocks(p, 2)));
}

TEST(DoubleCentralizer, TypeA) {
  HeckeAlgebra<Rational> alg(generic(1, 3, 43), 3);
  MurphyBasis<Rational> mb(alg);
  WeylModules<Rational> wm(mb);
  auto weights = enumerate_multicompositions(1, 3);
  auto res = double_centralizer_check(wm, weights);
  EXPECT_EQ(res.commutant_dim, schur_dimension(weights, 1, 3));
  EXPECT_EQ(res.bicommutant_dim, 6);
}

TEST(DoubleCentralizer, OmegaOnly) {
  HeckeAlgebra<Rational> alg(generic(2, 2, 44), 2);
  MurphyBasis<Rational> mb(alg);
  WeylModules<Rational> wm(mb);
  auto res = double_centralizer_check(wm, {canonical(omega_weight(2, 2))});
  EXPECT_EQ(res.commutant_dim, 8);
  EXPECT_EQ(res.bicommutant_dim, 8);
}

TEST(Borel, Counts) {
  auto b = borel_census(1, 2);
  EXPECT_EQ(b.minus, 6);
  EXPECT_EQ(b.plus, 6);
  EXPECT_TRUE(b.star_bijection);
  EXPECT_EQ(b.schur_dim, 10);
  auto c = borel_census(2, 2);
  EXPECT_EQ(c.minus, c.plus);
  EXPECT_EQ(c.schur_dim, 210);
}
