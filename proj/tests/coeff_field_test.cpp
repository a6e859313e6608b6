#include "qsym/coeff_field.hpp"

#include <random>

#include "gtest/gtest.h"
#include "test_util.hpp"

namespace qsym {
namespace {

const QParams<Scalar> P = symbolic_params();
const Scalar q = Scalar::monomial(1, 0, 0);
const Scalar qi = Scalar::monomial(-1, 0, 0);
const Scalar u = Scalar::monomial(0, 1, 0);
const Scalar ui = Scalar::monomial(0, -1, 0);

TEST(QNum, Examples) {
  EXPECT_TRUE(qnum(P, {0, 0, 0}).is_zero());
  EXPECT_EQ(qnum(P, {0, 0, 2}), q + qi);
  EXPECT_EQ(qnum(P, {1, 0, 0}), (u - ui) / (q - qi));
  // [2] divides (q^2 - q^-2) exactly, so no denominator survives.
  EXPECT_TRUE(qnum(P, {0, 0, 2}).denominator().is_one());
}

TEST(QNum, OddUnderNegation) {
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -3; c <= 3; ++c) {
        const WeightExpr w{a, b, c};
        EXPECT_EQ(qnum(P, -w), -qnum(P, w)) << w.to_string();
      }
}

TEST(QPoch, Examples) {
  const WeightExpr lam = WeightExpr::lambda();
  EXPECT_TRUE(qpoch(P, {2, -1, 5}, 0).is_one());
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(qpoch(P, WeightExpr::integer(1), n), qfact(P, n));
  EXPECT_EQ(qpoch(P, lam, 2), qnum(P, lam) * qnum(P, lam + 1));
}

TEST(QBinom, Examples) {
  for (int n = 0; n <= 8; ++n) EXPECT_TRUE(qbinom(P, n, 0).is_one());
  EXPECT_EQ(qbinom(P, 2, 1), q + qi);
  EXPECT_EQ(qbinom(P, 5, 2), qbinom(P, 5, 3));
  EXPECT_TRUE(qbinom(P, 4, -1).is_zero());
  EXPECT_TRUE(qbinom(P, 4, 5).is_zero());
}

TEST(QBinom, FactorialIdentity) {
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= n; ++k)
      EXPECT_EQ(qbinom(P, n, k) * qfact(P, k) * qfact(P, n - k), qfact(P, n)) << n << "," << k;
}

TEST(ScalarEval, Examples) {
  const SamplePoint at2{2, 1, 1};
  EXPECT_EQ(scalar_eval(q + qi, at2), Rational(5, 2));
  const SamplePoint pt{2, 3, 5};
  EXPECT_EQ(scalar_eval(qnum(P, WeightExpr::lambda()), pt), Rational(16, 9));
  const SamplePoint at1{1, 1, 1};
  EXPECT_THROW(scalar_eval(Scalar(1) / (q - qi), at1), DenominatorVanishes);
}

TEST(ScalarEval, RingHomomorphism) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const Scalar a = testing::random_scalar(rng, P);
    const Scalar b = testing::random_scalar(rng, P);
    const SamplePoint pt = sample_point(rng);
    try {
      const Rational ea = scalar_eval(a, pt);
      const Rational eb = scalar_eval(b, pt);
      EXPECT_EQ(scalar_eval(a * b, pt), ea * eb);
      EXPECT_EQ(scalar_eval(a + b, pt), ea + eb);
    } catch (const DenominatorVanishes&) {
    }
  }
}

TEST(ScalarField, Axioms) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Scalar a = testing::random_scalar(rng, P);
    const Scalar b = testing::random_scalar(rng, P);
    const Scalar c = testing::random_scalar(rng, P);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_TRUE((a - a).is_zero());
    if (!a.is_zero()) EXPECT_TRUE((a / a).is_one() || a / a == Scalar(1));
  }
}

TEST(ScalarField, NumDenNormalization) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const Scalar a = testing::random_scalar(rng, P);
    const LaurentPoly den = a.denominator();
    ASSERT_FALSE(den.is_zero());
    EXPECT_GT(den.leading().second, 0);
    // a = num/den by cross-multiplication
    EXPECT_EQ(Scalar(a.numerator()), a * Scalar(den));
  }
}

TEST(LaurentPoly, ExactDivision) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const LaurentPoly a = testing::random_nonzero_poly(rng);
    const LaurentPoly b = testing::random_nonzero_poly(rng);
    auto quot = divide_exact(a * b, b);
    ASSERT_TRUE(quot.has_value());
    EXPECT_EQ(*quot, a);
  }
  // q + 1 does not divide q^2 + 1
  const LaurentPoly q2p1 = LaurentPoly::monomial({2, 0, 0}) + LaurentPoly(1L);
  const LaurentPoly qp1 = LaurentPoly::monomial({1, 0, 0}) + LaurentPoly(1L);
  EXPECT_FALSE(divide_exact(q2p1, qp1).has_value());
}

TEST(LaurentPoly, Cyclotomic) {
  EXPECT_EQ(cyclotomic(1), (std::vector<long>{-1, 1}));
  EXPECT_EQ(cyclotomic(2), (std::vector<long>{1, 1}));
  EXPECT_EQ(cyclotomic(6), (std::vector<long>{1, -1, 1}));
  EXPECT_EQ(cyclotomic(12), (std::vector<long>{1, 0, -1, 0, 1}));
}

}  // namespace
}  // namespace qsym
