#include <gtest/gtest.h>

#include "akh/characters.hpp"
#include "akh/tensor.hpp"

using namespace akh;

namespace {

template <class F>
bool relations(const std::vector<int>& split, int n, const F& v, const std::vector<F>& Q, std::string* why = nullptr) {
  TensorSpace V(split, n);
  return relations_hold(tensor_generators(V, v, Q), tensor_params(v, Q), why);
}

}  // namespace

TEST(Tensor, SpaceLayout) {
  TensorSpace V({2, 1}, 2);
  EXPECT_EQ(V.dim(), 9);
  EXPECT_EQ(V.index({3, 1}), 6);
  EXPECT_EQ(V.gamma(2), 1);
  EXPECT_EQ(V.gamma(3), 2);
  EXPECT_THROW(TensorSpace({0}, 2), DomainError);
}

TEST(Tensor, JimboQuadraticRelation) {
  TensorSpace V({3}, 2);
  Rational v(3);
  auto t = jimbo_action(V, 1, v);
  auto I = Matrix<Rational>::identity(V.dim());
  EXPECT_TRUE(((t - v * I) * (t + (Rational(1) / v) * I)).is_zero());
  EXPECT_EQ(t * jimbo_inverse(V, 1, v), I);
}

TEST(Tensor, LevelOneT0IsScalar) {
  TensorSpace V({2}, 3);
  Rational Q(5);
  EXPECT_EQ(sakamoto_shoji_T0(V, Rational(2), std::vector<Rational>{Q}), Q * Matrix<Rational>::identity(V.dim()));
}

TEST(Tensor, RelationsSymbolic) {
  RatFunc v = RatFunc::var(kVarV);
  std::string why;
  EXPECT_TRUE(relations<RatFunc>({1, 1}, 2, v, {RatFunc::var(1), RatFunc::var(2)}, &why)) << why;
  EXPECT_TRUE(relations<RatFunc>({1, 1}, 3, v, {RatFunc::var(1), RatFunc::var(2)}, &why)) << why;
  EXPECT_TRUE(relations<RatFunc>({2, 1}, 2, v, {RatFunc::var(1), RatFunc::var(2)}, &why)) << why;
}

TEST(Tensor, RelationsNumeric) {
  std::string why;
  EXPECT_TRUE(relations<Rational>({1, 2}, 3, Rational(2), {Rational(3), Rational(-1)}, &why)) << why;
  EXPECT_TRUE(relations<Rational>({1, 1, 1}, 2, Rational(1, 2), {Rational(1), Rational(2), Rational(5)}, &why)) << why;
}

TEST(Tensor, DimensionCounts) {
  for (const auto& [split, n] : std::vector<std::pair<std::vector<int>, int>>{{{1, 1}, 2}, {{1, 1}, 3}, {{2, 1}, 3}, {{2}, 4}, {{1, 1, 1}, 3}}) {
    auto c = schur_weyl_counts(TensorSpace(split, n));
    EXPECT_EQ(c.tensor_dim, c.bimodule_dim);
  }
}

TEST(Tensor, Commutant) {
  TensorSpace V({2}, 2);
  Rational v(2);
  EXPECT_EQ(commutant_dimension(tensor_generators(V, v, std::vector<Rational>{Rational(1)}), V.dim()), 10);
  TensorSpace W({1, 1}, 2);
  auto gens = tensor_generators(W, v, std::vector<Rational>{Rational(1), Rational(7)});
  EXPECT_EQ(commutant_dimension(gens, W.dim()), schur_weyl_counts(W).expected_commutant);
}
