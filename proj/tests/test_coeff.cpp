#include <gtest/gtest.h>

#include "akh/coeff/cyclotomic.hpp"
#include "akh/coeff/modp.hpp"
#include "akh/coeff/ratfunc.hpp"
#include "akh/coeff/rational.hpp"
#include "akh/coeff/upoly.hpp"
#include "akh/coeff/value.hpp"
#include "akh/linalg.hpp"

using namespace akh;

TEST(Rational, ParseAndArithmetic) {
  Rational a = Rational::parse("3/4"), b = Rational::parse("-2");
  EXPECT_EQ((a + b).str(), "-5/4");
  EXPECT_EQ((a * b).str(), "-3/2");
  EXPECT_EQ((a / b).str(), "-3/8");
  EXPECT_EQ(Rational::parse("6/8"), a);
  EXPECT_THROW(Rational::parse("1/0"), DomainError);
  EXPECT_THROW(Rational::parse("x"), DomainError);
  EXPECT_THROW(a / Rational(0), DomainError);
}

TEST(ModP, FieldAxiomsInGF13) {
  const std::uint32_t p = 13;
  for (long x = 1; x < 13; ++x) {
    ModP a(p, x);
    EXPECT_EQ(a * a.inv(), ModP(p, 1));
    ModP pw(p, 1);
    for (int k = 0; k < 12; ++k) pw = pw * a;
    EXPECT_EQ(pw, ModP(p, 1));  // Fermat
  }
  EXPECT_THROW(ModP(p, 0).inv(), DomainError);
}

TEST(ModP, UnboundConstantsMeetBoundElements) {
  ModP a(7, 3);
  EXPECT_EQ(ModP(1) + a, ModP(7, 4));
  EXPECT_EQ(ModP(10) * a, ModP(7, 2));
  EXPECT_EQ((ModP(1) / ModP(2)) * ModP(7, 2), ModP(7, 1));
}

TEST(Cyclo, RootsOfUnity) {
  Cyclo z = Cyclo::zeta_power(3, 1);
  EXPECT_EQ(z * z * z, Cyclo(1));
  EXPECT_TRUE((Cyclo(1) + z + z * z).is_zero());
  Cyclo i = Cyclo::zeta_power(4, 1);
  EXPECT_EQ(i * i, Cyclo(-1));
  Cyclo w = Cyclo::zeta_power(5, 2) + Cyclo(3);
  EXPECT_EQ(w * w.inv(), Cyclo(1));
}

TEST(RatFunc, CancellationAndEvaluation) {
  RatFunc q = RatFunc::var(kVarQ);
  RatFunc x = (q * q - RatFunc(1)) / (q - RatFunc(1));
  EXPECT_EQ(x, q + RatFunc(1));
  EXPECT_EQ(q * RatFunc::var(kVarQ, -1), RatFunc(1));
  RatFunc Q1 = RatFunc::var(1);
  RatFunc y = (Q1 - q) / (q + RatFunc(2));
  std::vector<Rational> vals(kNumVars, Rational(0));
  vals[kVarQ] = Rational(3);
  vals[1] = Rational(5);
  EXPECT_EQ(y.evaluate(vals), Rational(2) / Rational(5));
  EXPECT_TRUE((y - y).is_zero());
}

TEST(UFrac, ValuationAtOne) {
  using T = UFrac<Rational>;
  T t = T::t();
  T a = (t - T(1)) * (t - T(1)) / (t + T(1));
  EXPECT_EQ(valuation_at_t1(a).value, 2);
  EXPECT_EQ(signed_valuation_at_t1(T(1) / (t - T(1))), -1);
  EXPECT_THROW(valuation_at_t1(T(1) / (t - T(1))), DomainError);
  EXPECT_TRUE(valuation_at_t1(T(0)).infinite);
}

TEST(Linalg, DeterminantInverseKernel) {
  Matrix<Rational> a(3, 3);
  int vals[3][3] = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = Rational(vals[i][j]);
  auto inv = inverse(a);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(a * *inv, Matrix<Rational>::identity(3));
  EXPECT_EQ(determinant(a) * determinant(*inv), Rational(1));
  EXPECT_EQ(determinant(a), Rational(18));  // cofactor expansion by hand

  Matrix<Rational> b(3, 4);
  for (int j = 0; j < 4; ++j) {
    b(0, j) = Rational(j + 1);
    b(1, j) = Rational(2 * (j + 1));
    b(2, j) = Rational(j * j);
  }
  EXPECT_EQ(rank(b), 2);
  EchelonSolver<Rational> s(b);
  auto ker = s.kernel();
  EXPECT_EQ(static_cast<int>(ker.size()), 2);
  for (const auto& v : ker)
    for (int i = 0; i < 3; ++i) {
      Rational x(0);
      for (int j = 0; j < 4; ++j) x += b(i, j) * v[j];
      EXPECT_TRUE(x.is_zero());
    }
  RowSpace<Rational> rs(4);
  for (int i = 0; i < 3; ++i) {
    std::vector<Rational> row;
    for (int j = 0; j < 4; ++j) row.push_back(b(i, j));
    rs.add(row);
  }
  EXPECT_EQ(rs.dim(), 2);
  EXPECT_EQ(static_cast<int>(rs.kernel().size()), 2);
}

TEST(Value, FieldAndValueGrammar) {
  EXPECT_EQ(parse_field("QQ").kind, FieldSpec::Kind::kRationals);
  EXPECT_EQ(parse_field("GF(7)").p, 7u);
  EXPECT_EQ(parse_field("cyclo(5)").e, 5);
  EXPECT_THROW(parse_field("GF(8)"), DomainError);
  EXPECT_THROW(parse_field("RR"), DomainError);
  auto f7 = parse_field("GF(7)");
  EXPECT_EQ(parse_value<ModP>("3/2", f7), ModP(7, 5));
  EXPECT_THROW(parse_value<ModP>("1/7", f7), DomainError);
  auto c3 = parse_field("cyclo(3)");
  EXPECT_EQ(parse_value<Cyclo>("zeta^2", c3), Cyclo::zeta_power(3, 2));
  EXPECT_EQ(parse_value<Cyclo>("-zeta", c3), -Cyclo::zeta_power(3, 1));
  auto qs = parse_values<Rational>("1, -1/2,3", parse_field("QQ"));
  ASSERT_EQ(qs.size(), 3u);
  EXPECT_EQ(qs[1], Rational(-1) / Rational(2));
}

TEST(Value, MultiplicativeOrder) {
  EXPECT_EQ(multiplicative_order(Rational(-1)), 2);
  EXPECT_EQ(multiplicative_order(Rational(2)), 0);
  EXPECT_EQ(multiplicative_order(ModP(7, 2)), 3);
  EXPECT_EQ(multiplicative_order(Cyclo::zeta_power(5, 1)), 5);
}
