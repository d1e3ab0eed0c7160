#include <gtest/gtest.h>

#include "akh/characters.hpp"
#include "akh/seminormal.hpp"
#include "test_util.hpp"

using namespace akh;
using akh::testing::generic;

TEST(SchurElements, TypeA) {
  EXPECT_EQ(schur_element({{2}}).value.str(), "1+q");
  EXPECT_EQ(schur_element({{1, 1}}).value.str(), "(1+q)/q");
}

TEST(SchurElements, IndependentOfSymbolLength) {
  for (int r = 1; r <= 2; ++r)
    for (const auto& lam : enumerate_multipartitions(r, 3)) {
      int L = std::max(1, multipartition_length(lam));
      EXPECT_EQ(schur_element(lam, L).value, schur_element(lam, L + 1).value) << shape_str(lam);
    }
  EXPECT_EQ(schur_element({{1}, {1}, {}}, 1).value, schur_element({{1}, {1}, {}}, 2).value);
}

TEST(SchurElements, TraceOfIdentity) {
  // τ(1) = 1 = Σ_λ dim V^λ / s_λ.
  for (auto [r, n] : std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {2, 2}, {2, 3}, {3, 2}}) {
    RatFunc total(0);
    for (const auto& lam : enumerate_multipartitions(r, n))
      total += RatFunc(static_cast<long>(standard_tableaux(lam).size())) / schur_element(lam).value;
    EXPECT_EQ(total, RatFunc(1)) << r << "," << n;
  }
}

TEST(SchurElements, TauExpansion) {
  EXPECT_TRUE(tau_expansion_check(HeckeAlgebra<RatFunc>(symbolic_params(1), 3)));
  EXPECT_TRUE(tau_expansion_check(HeckeAlgebra<Rational>(generic(2, 3, 21), 3)));
  EXPECT_TRUE(tau_expansion_check(HeckeAlgebra<Rational>(generic(3, 2, 22), 2)));
}

TEST(Seminormal, RelationsSymbolic) {
  for (int r = 1; r <= 2; ++r)
    for (int n = 0; n <= 3; ++n) {
      auto p = symbolic_params(r);
      for (const auto& lam : enumerate_multipartitions(r, n)) {
        std::string why;
        EXPECT_TRUE(relations_hold(seminormal_rep(lam, p).gens, p, &why)) << shape_str(lam) << " " << why;
      }
    }
}

TEST(Seminormal, NaiveDiagonalBreaksTheRelations) {
  auto p = symbolic_params(1);
  auto rep = seminormal_rep({{2, 1}}, p, true, SeminormalVariant::kNaiveDiagonal);
  EXPECT_FALSE(relations_hold(rep.gens, p));
}

TEST(Seminormal, OracleIsFaithfulAndMultiplicative) {
  HeckeAlgebra<Rational> alg(generic(2, 2, 23), 2);
  SeminormalOracle<Rational> oracle(alg);
  RowSpace<Rational> span(static_cast<int>(alg.dim()));
  for (std::uint32_t k = 0; k < alg.dim(); ++k) span.add(SeminormalOracle<Rational>::flatten(oracle.monomial(k)));
  EXPECT_EQ(span.dim(), static_cast<int>(alg.dim()));
  for (std::uint32_t a = 0; a < alg.dim(); a += 3)
    for (std::uint32_t b = 0; b < alg.dim(); b += 5) {
      auto lhs = oracle.image(alg.multiply(alg.basis_element(a), alg.basis_element(b)));
      auto rhs = SeminormalOracle<Rational>::product(oracle.monomial(a), oracle.monomial(b));
      EXPECT_TRUE(SeminormalOracle<Rational>::equal(lhs, rhs));
    }
}

TEST(Seminormal, RefusesNonSemisimpleParameters) {
  auto p = akh::testing::params<Rational>(1, Rational(-1), {Rational(1)});
  EXPECT_THROW(seminormal_rep({{2}}, p), DomainError);
}

TEST(Characters, DegreeAtIdentity) {
  HeckeAlgebra<Rational> alg(generic(2, 3, 24), 3);
  SeminormalOracle<Rational> oracle(alg);
  for (std::size_t b = 0; b < oracle.reps().size(); ++b)
    EXPECT_EQ(character_value(oracle, b, alg.one()), Rational(oracle.reps()[b].dim()));
}
