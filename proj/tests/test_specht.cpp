#include <gtest/gtest.h>

#include "akh/characters.hpp"
#include "akh/crystal.hpp"
#include "akh/specht.hpp"
#include "test_util.hpp"

using namespace akh;
using akh::testing::generic;
using akh::testing::params;

TEST(Specht, SmallGramMatrices) {
  HeckeAlgebra<RatFunc> a1(symbolic_params(1), 2);
  MurphyBasis<RatFunc> m1(a1);
  auto g = m1.gram_matrix({{2}});
  ASSERT_EQ(g.rows(), 1);
  EXPECT_EQ(g(0, 0), RatFunc::var(kVarQ) + RatFunc(1));
  EXPECT_EQ(m1.specht_action({{2}}, 1)(0, 0), RatFunc::var(kVarQ));

  HeckeAlgebra<RatFunc> a2(symbolic_params(2), 2);
  MurphyBasis<RatFunc> m2(a2);
  EXPECT_EQ(m2.gram_matrix({{1}, {1}})(0, 0), RatFunc::var(1) - RatFunc::var(2));
}

TEST(Specht, ActionIsARepresentation) {
  for (const auto& p : {generic(2, 3, 31), params<Rational>(2, Rational(-1), {Rational(1), Rational(-1)})}) {
    HeckeAlgebra<Rational> alg(p, 3);
    MurphyBasis<Rational> mb(alg);
    for (const auto& c : mb.cells()) {
      std::vector<Matrix<Rational>> gens;
      for (int i = 0; i < 3; ++i) gens.push_back(mb.specht_action(c.shape, i));
      std::string why;
      EXPECT_TRUE(relations_hold(gens, p, &why)) << shape_str(c.shape) << " " << why;
    }
  }
}

TEST(Specht, GramIsSymmetricAndInvariant) {
  HeckeAlgebra<Rational> alg(params<Rational>(2, Rational(-1), {Rational(1), Rational(1)}), 3);
  MurphyBasis<Rational> mb(alg);
  for (const auto& c : mb.cells()) {
    auto g = mb.gram_matrix(c.shape);
    EXPECT_EQ(g, g.transpose());
    for (int i = 0; i < 3; ++i) {
      auto rho = mb.specht_action(c.shape, i);
      EXPECT_EQ(rho * g, g * rho.transpose()) << shape_str(c.shape) << " T" << i;
    }
  }
}

TEST(Specht, GenericCharactersMatchSeminormalForms) {
  auto p = generic(2, 3, 32);
  HeckeAlgebra<Rational> alg(p, 3);
  MurphyBasis<Rational> mb(alg);
  SeminormalOracle<Rational> oracle(alg);
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::uint32_t> pick(0, alg.dim() - 1);
  for (std::size_t b = 0; b < oracle.reps().size(); ++b) {
    const auto& lam = oracle.reps()[b].shape;
    EXPECT_EQ(rank(mb.gram_matrix(lam)), oracle.reps()[b].dim());
    for (int t = 0; t < 10; ++t) {
      auto h = alg.basis_element(pick(rng));
      EXPECT_EQ(mb.specht_matrix(lam, h).trace(), character_value(oracle, b, h)) << shape_str(lam);
    }
  }
}

TEST(Specht, TypeAAtQMinusOne) {
  HeckeAlgebra<Rational> alg(params<Rational>(1, Rational(-1), {Rational(1)}), 4);
  MurphyBasis<Rational> mb(alg);
  for (const auto& s : simple_dimensions(mb)) {
    EXPECT_EQ(s.dim_simple > 0, is_e_restricted(s.shape[0], 2)) << shape_str(s.shape);
    if (s.shape == Multipartition{{2, 1, 1}}) {
      EXPECT_EQ(s.dim_simple, 2);
    }
  }
}

TEST(Specht, SimpleDimensionsSumOfSquaresAtGenericPoint) {
  HeckeAlgebra<Rational> alg(generic(2, 3, 33), 3);
  MurphyBasis<Rational> mb(alg);
  long long total = 0;
  for (const auto& s : simple_dimensions(mb)) total += static_cast<long long>(s.dim_simple) * s.dim_simple;
  EXPECT_EQ(total, static_cast<long long>(alg.dim()));
}

TEST(Blocks, GenericBlocksAreSingletons) {
  auto p = generic(2, 3, 34);
  for (const auto& b : residue_blocks(p, 3)) EXPECT_EQ(b.size(), 1u);
}

TEST(Blocks, ResidueClassesAtQMinusOne) {
  // Type A, e = 2, n = 3: (3) and (1³) share the 2-core (1); (2,1) is a core.
  auto blocks = residue_blocks(params<Rational>(1, Rational(-1), {Rational(1)}), 3);
  ASSERT_EQ(blocks.size(), 2u);
  for (const auto& b : blocks) {
    if (b.size() == 1) {
      EXPECT_EQ(b[0], (Multipartition{{2, 1}}));
    } else {
      EXPECT_EQ(b.size(), 2u);
    }
  }
}

TEST(Morita, Predicate) {
  auto p = params<Rational>(2, Rational(2), {Rational(1), Rational(3)});
  EXPECT_TRUE(morita_reduction_predicate(p, 3, {{1}, {2}}));
  auto d = params<Rational>(2, Rational(2), {Rational(1), Rational(4)});
  EXPECT_FALSE(morita_reduction_predicate(d, 3, {{1}, {2}}));
  EXPECT_TRUE(morita_reduction_predicate(d, 2, {{1}, {2}}));
  EXPECT_THROW(morita_reduction_predicate(d, 2, {{1}}), DomainError);
}
