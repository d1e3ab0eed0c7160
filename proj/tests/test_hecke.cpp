#include <gtest/gtest.h>

#include "akh/characters.hpp"
#include "akh/hecke.hpp"
#include "test_util.hpp"

using namespace akh;
using akh::testing::generic;

namespace {

template <class F>
void expect_relations(const HeckeAlgebra<F>& alg) {
  using H = HeckeAlgebra<F>;
  const auto& p = alg.params();
  int n = alg.n();
  auto T = [&](int i) { return alg.generator(i); };
  auto mul = [&](const auto& a, const auto& b) { return alg.multiply(a, b); };
  auto ord = alg.one();
  for (int s = 0; s < p.r; ++s) ord = mul(ord, H::sub(T(0), alg.scalar(p.Q[s])));
  EXPECT_TRUE(ord.empty());
  for (int i = 1; i < n; ++i) {
    auto lhs = mul(H::sub(T(i), alg.scalar(p.q)), H::add(T(i), alg.one()));
    EXPECT_TRUE(lhs.empty()) << "quadratic relation " << i;
  }
  if (n > 1) {
    EXPECT_TRUE(H::equal(mul(mul(T(0), T(1)), mul(T(0), T(1))), mul(mul(T(1), T(0)), mul(T(1), T(0)))));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j) EXPECT_TRUE(H::equal(mul(T(i), T(j)), mul(T(j), T(i))));
  for (int i = 1; i + 1 < n; ++i)
    EXPECT_TRUE(H::equal(mul(mul(T(i), T(i + 1)), T(i)), mul(mul(T(i + 1), T(i)), T(i + 1))));
}

}  // namespace

TEST(Hecke, Dimension) {
  for (int r = 1; r <= 3; ++r)
    for (int n = 0; n <= 3; ++n) {
      HeckeAlgebra<Rational> alg(generic(r, n, 1), n);
      EXPECT_EQ(alg.dim(), static_cast<std::uint32_t>(ipow(r, n) * factorial(n)));
    }
}

TEST(Hecke, DefiningRelationsSymbolic) {
  HeckeAlgebra<RatFunc> alg(symbolic_params(2), 3);
  expect_relations(alg);
}

TEST(Hecke, DefiningRelationsNumeric) {
  expect_relations(HeckeAlgebra<Rational>(generic(3, 3, 2), 3));
  expect_relations(HeckeAlgebra<Rational>(akh::testing::params<Rational>(2, Rational(-1), {Rational(1), Rational(-1)}), 4));
  expect_relations(HeckeAlgebra<ModP>(akh::testing::params<ModP>(2, ModP(5, 2), {ModP(5, 1), ModP(5, 3)}), 3));
}

TEST(Hecke, Associativity) {
  HeckeAlgebra<Rational> alg(generic(2, 3, 3), 3);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::uint32_t> pick(0, alg.dim() - 1);
  for (int t = 0; t < 30; ++t) {
    auto a = alg.basis_element(pick(rng)), b = alg.basis_element(pick(rng)), c = alg.basis_element(pick(rng));
    EXPECT_TRUE(HeckeAlgebra<Rational>::equal(alg.multiply(alg.multiply(a, b), c), alg.multiply(a, alg.multiply(b, c))));
  }
}

TEST(Hecke, JucysMurphyElementsCommuteAndSymmetricProductsAreCentral) {
  HeckeAlgebra<Rational> alg(generic(2, 3, 4), 3);
  using H = HeckeAlgebra<Rational>;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) EXPECT_TRUE(H::equal(alg.multiply(alg.L(i), alg.L(j)), alg.multiply(alg.L(j), alg.L(i))));
  auto prod = alg.multiply(alg.multiply(alg.L(1), alg.L(2)), alg.L(3));
  auto sum = H::add(H::add(alg.L(1), alg.L(2)), alg.L(3));
  for (int i = 0; i < 3; ++i) {
    EXPECT_TRUE(H::equal(alg.multiply(prod, alg.generator(i)), alg.multiply(alg.generator(i), prod)));
    EXPECT_TRUE(H::equal(alg.multiply(sum, alg.generator(i)), alg.multiply(alg.generator(i), sum)));
  }
}

TEST(Hecke, StarIsAnAntiInvolution) {
  HeckeAlgebra<Rational> alg(generic(2, 3, 5), 3);
  std::mt19937 rng(9);
  std::uniform_int_distribution<std::uint32_t> pick(0, alg.dim() - 1);
  for (int t = 0; t < 20; ++t) {
    auto a = alg.basis_element(pick(rng)), b = alg.basis_element(pick(rng));
    EXPECT_TRUE(HeckeAlgebra<Rational>::equal(alg.star(alg.star(a)), a));
    EXPECT_TRUE(HeckeAlgebra<Rational>::equal(alg.star(alg.multiply(a, b)), alg.multiply(alg.star(b), alg.star(a))));
  }
}

TEST(Hecke, TauIsATrace) {
  HeckeAlgebra<Rational> alg(generic(2, 3, 6), 3);
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::uint32_t> pick(0, alg.dim() - 1);
  for (int t = 0; t < 30; ++t) {
    auto a = alg.basis_element(pick(rng)), b = alg.basis_element(pick(rng));
    EXPECT_EQ(alg.tau(alg.multiply(a, b)), alg.tau(alg.multiply(b, a)));
  }
}

TEST(Hecke, RightMultiplicationAgreesWithMultiply) {
  HeckeAlgebra<Rational> alg(generic(3, 2, 8), 2);
  for (std::uint32_t k = 0; k < alg.dim(); ++k)
    for (int i = 0; i < 2; ++i)
      EXPECT_TRUE(HeckeAlgebra<Rational>::equal(alg.right_mul_generator(alg.basis_element(k), i), alg.multiply(alg.basis_element(k), alg.generator(i))));
}

TEST(Hecke, PoincareFactor) {
  auto p = akh::testing::params<Rational>(1, Rational(-1), {Rational(1)});
  EXPECT_TRUE(p_hecke(p, 2).is_zero());
  EXPECT_FALSE(p_hecke(p, 1).is_zero());
  auto g = akh::testing::params<Rational>(2, Rational(2), {Rational(1), Rational(4)});
  EXPECT_TRUE(p_hecke(g, 3).is_zero());  // q^2 Q_1 = Q_2
  EXPECT_FALSE(p_hecke(g, 2).is_zero());
}
