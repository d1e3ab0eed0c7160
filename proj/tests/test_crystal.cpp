#include <gtest/gtest.h>

#include "akh/crystal.hpp"
#include "akh/specht.hpp"
#include "test_util.hpp"

using namespace akh;
using akh::testing::params;

TEST(Crystal, LevelOneIsERestricted) {
  for (int e : {2, 3, 4})
    for (int n = 0; n <= 6; ++n) {
      std::vector<Multipartition> want;
      for (const auto& p : partitions(n))
        if (is_e_restricted(p, e)) want.push_back(canonical({p}));
      auto got = kleshchev_multipartitions(n, make_config(e, {0}));
      std::sort(want.begin(), want.end());
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, want) << "e=" << e << " n=" << n;
    }
}

TEST(Crystal, StandardAndSignatureRulesAgree) {
  for (int e : {2, 3})
    for (const auto& charge : std::vector<std::vector<int>>{{0, 0}, {0, 1}, {0, 1, 1}, {0, 2, 1}})
      for (int n = 0; n <= 5; ++n) {
        auto c = make_config(e, charge);
        EXPECT_EQ(kleshchev_multipartitions(n, c, NormalRule::kStandard), kleshchev_multipartitions(n, c, NormalRule::kSignature));
      }
}

TEST(Crystal, LiteralRuleDiverges) {
  auto c = make_config(2, {0});
  EXPECT_NE(kleshchev_multipartitions(3, c, NormalRule::kLiteral), kleshchev_multipartitions(3, c, NormalRule::kStandard));
}

TEST(Crystal, InfiniteEKeepsEverything) {
  auto c = make_config(0, {0, 5});
  EXPECT_EQ(kleshchev_multipartitions(3, c).size(), enumerate_multipartitions(2, 3).size());
}

TEST(Crystal, MatchesNonzeroSimplesLevelTwo) {
  for (int a : {0, 1})
    for (int n = 1; n <= 3; ++n) {
      Rational q(-1);
      auto p = params<Rational>(2, q, {Rational(1), power(q, a)});
      HeckeAlgebra<Rational> alg(p, n);
      MurphyBasis<Rational> mb(alg);
      std::vector<Multipartition> got;
      for (const auto& s : simple_dimensions(mb))
        if (s.dim_simple > 0) got.push_back(s.shape);
      auto want = kleshchev_multipartitions(n, make_config(2, {0, a}));
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      EXPECT_EQ(got, want) << "charge (0," << a << ") n=" << n;
    }
}

TEST(Crystal, NormalAndGoodNodes) {
  auto c = make_config(2, {0});
  // λ = (2): the removable node (1,2) has residue 1, the addable node (2,1)
  // below it has residue 1 as well, so it is not normal.
  auto cl = classify_nodes({{2}}, 1, c);
  ASSERT_EQ(cl.removable.size(), 1u);
  EXPECT_FALSE(cl.normal[0]);
  EXPECT_FALSE(cl.good.has_value());
  auto cl2 = classify_nodes({{1, 1}}, 1, c);
  ASSERT_EQ(cl2.removable.size(), 1u);
  EXPECT_TRUE(cl2.normal[0]);
  EXPECT_TRUE(cl2.good.has_value());
}

TEST(Crystal, BranchingStaysKleshchev) {
  auto c = make_config(3, {0, 1});
  for (int n = 1; n <= 4; ++n)
    for (const auto& mu : kleshchev_multipartitions(n, c)) {
      auto terms = branching_prediction(mu, c);
      EXPECT_FALSE(terms.empty()) << shape_str(mu);
      for (const auto& t : terms) EXPECT_TRUE(is_kleshchev(t.lambda, c));
    }
  EXPECT_THROW(branching_prediction({{2}, {}}, make_config(2, {0, 0})), DomainError);
}

TEST(Crystal, RestrictionAndInduction) {
  auto c = make_config(2, {0});
  EXPECT_EQ(i_restriction({{2, 1}}, 1, c).size(), 2u);  // both removable nodes have residue 1
  EXPECT_EQ(i_induction({{2, 1}}, 0, c).size(), 3u);
  EXPECT_EQ(e_residue({2, 3, 1}, c), 1);
}
