#include <gtest/gtest.h>

#include "akh/jantzen.hpp"
#include "test_util.hpp"

using namespace akh;
using akh::testing::params;

TEST(Jantzen, LiftedParameters) {
  ModularSystem<Rational> sys{params<Rational>(2, Rational(-1), {Rational(1), Rational(0)}), 2};
  auto lp = sys.lifted();
  using T = UFrac<Rational>;
  T t = T::t();
  EXPECT_EQ(lp.q, T(Rational(-1)) * t);
  EXPECT_EQ(lp.Q[0], t * t);
  EXPECT_EQ(lp.Q[1], t * t * t * t - T(1));
}

TEST(Jantzen, GFactorTrivialOffDominance) {
  ModularSystem<Rational> sys{params<Rational>(1, Rational(-1), {Rational(1)}), 3};
  auto g = g_factor({{2, 1}}, {{3}}, sys);
  EXPECT_EQ(g.value, UFrac<Rational>(1));
  EXPECT_EQ(g.pairs, 0);
}

TEST(Jantzen, SumFormulaTypeA) {
  for (int n = 1; n <= 3; ++n) {
    ModularSystem<Rational> sys{params<Rational>(1, Rational(-1), {Rational(1)}), n};
    auto rep = sum_formula_check(sys, enumerate_multicompositions(1, n));
    for (const auto& e : rep.entries) EXPECT_TRUE(e.ok()) << shape_str(e.lambda) << " " << shape_str(e.nu) << " " << e.lhs << " " << e.rhs;
  }
}

TEST(Jantzen, SumFormulaLevelTwo) {
  ModularSystem<Rational> sys{params<Rational>(2, Rational(-1), {Rational(1), Rational(-1)}), 2};
  auto rep = sum_formula_check(sys, enumerate_multicompositions(2, 2));
  EXPECT_TRUE(rep.all_ok());
  EXPECT_FALSE(rep.entries.empty());
}

TEST(Jantzen, TwoColumnExample) {
  // (2) over (1,1) at q = -1: det G^{(2)}_{(1,1)} = 1 + qt vanishes to order 1.
  ModularSystem<Rational> sys{params<Rational>(1, Rational(-1), {Rational(1)}), 2};
  auto rep = sum_formula_check(sys, enumerate_multicompositions(1, 2), {{{2}}});
  bool found = false;
  for (const auto& e : rep.entries)
    if (e.nu == Multicomposition{{1, 1}}) {
      EXPECT_EQ(e.lhs, 1);
      EXPECT_EQ(e.rhs, 1);
      found = true;
    }
  EXPECT_TRUE(found);
}
