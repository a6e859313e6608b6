#include "qsym/quantum_plane.hpp"

#include <random>

#include "gtest/gtest.h"
#include "test_util.hpp"

namespace qsym {
namespace {

using Plane = QPlanePoly<Scalar>;
using TX = TXPoly<Scalar>;

const QParams<Scalar> P = symbolic_params();
const Scalar q = Scalar::monomial(1, 0, 0);
const Scalar u = Scalar::monomial(0, 1, 0);
const Plane x = Plane::monomial(1, 0);
const Plane y = Plane::monomial(0, 1);
const Plane one = Plane::monomial(0, 0);

TEST(QpMul, Examples) {
  EXPECT_EQ(qp_mul(P, y, x), Plane::monomial(1, 1, q * q));
  std::mt19937_64 rng(1);
  const Plane r = testing::random_plane(rng, 5);
  EXPECT_EQ(qp_mul(P, one, r), r);
  const Plane s = x + y;
  Plane expected = Plane::monomial(2, 0) + Plane::monomial(0, 2) + Plane::monomial(1, 1, q * q + 1);
  EXPECT_EQ(qp_mul(P, s, s), expected);
}

TEST(QpMul, Associative) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const Plane a = testing::random_plane(rng, 3, 3);
    const Plane b = testing::random_plane(rng, 3, 3);
    const Plane c = testing::random_plane(rng, 2, 3);
    EXPECT_EQ(qp_mul(P, qp_mul(P, a, b), c), qp_mul(P, a, qp_mul(P, b, c)));
  }
}

TEST(QpMul, DegreeGrading) {
  std::mt19937_64 rng(3);
  for (int d1 = 0; d1 <= 4; ++d1)
    for (int d2 = 0; d2 <= 4; ++d2) {
      Plane a, b;
      for (int k = 0; k <= d1; ++k) a.add_term(k, d1 - k, Scalar(testing::random_poly(rng, 2, 2)));
      for (int k = 0; k <= d2; ++k) b.add_term(k, d2 - k, Scalar(testing::random_poly(rng, 2, 2)));
      const Plane ab = qp_mul(P, a, b);
      for (const auto& [key, c] : ab.terms()) EXPECT_EQ(key.first + key.second, d1 + d2);
    }
}

TEST(QpPowLinear, Examples) {
  EXPECT_EQ(qp_pow_linear(P, Scalar(1), 0), one);
  EXPECT_EQ(qp_pow_linear(P, Scalar(1), 2),
            Plane::monomial(2, 0) + Plane::monomial(1, 1, q * qnum(P, {0, 0, 2})) + Plane::monomial(0, 2));
}

TEST(QpPowLinear, MatchesIteratedProduct) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 3; ++trial) {
    const Scalar c = trial == 0 ? u : testing::random_scalar(rng, P);
    const Plane lin = x + Plane::monomial(0, 1, c);
    Plane acc = one;
    for (int n = 0; n <= 6; ++n) {
      EXPECT_EQ(qp_pow_linear(P, c, n), acc) << "n=" << n;
      acc = qp_mul(P, acc, lin);
    }
  }
}

TEST(Phi, Examples) {
  EXPECT_EQ(phi(P, TX::monomial(0, 0)), one);
  EXPECT_EQ(phi(P, TX::monomial(1, 0)), x + Plane::monomial(0, 1, u));
  EXPECT_EQ(phi(P, TX::monomial(2, 1)), Plane::monomial(2, 0) + Plane::monomial(1, 1, u * q * q));
}

// Closed form: t^n (tX)^m -> sum_k [n k] q^{(k + lambda + 2m)(n - k)} x^{k+m} y^{n-k}.
TEST(Phi, ClosedFormOnBasis) {
  for (int n = 0; n <= 6; ++n)
    for (int m = 0; m <= 4; ++m) {
      Plane expected;
      for (int k = 0; k <= n; ++k)
        expected.add_term(k + m, n - k, P.qbinom(n, k) * P.power({n - k, 0, (k + 2 * m) * (n - k)}));
      EXPECT_EQ(phi(P, TX::monomial(n + m, m)), expected);
    }
}

TEST(PhiInv, Examples) {
  EXPECT_EQ(phi_inv(P, x), TX::monomial(1, 1));
  const Scalar ui = Scalar::monomial(0, -1, 0);
  EXPECT_EQ(phi_inv(P, y), TX::monomial(1, 0, ui) - TX::monomial(1, 1, ui));
}

TEST(PhiInv, BijectionOnBasis) {
  for (int d = 0; d <= 12; ++d)
    for (int k = 0; k <= d; ++k) {
      const Plane b = Plane::monomial(k, d - k);
      EXPECT_EQ(phi(P, phi_inv(P, b)), b) << k << "," << d - k;
      const TX t = TX::monomial(d, k);
      EXPECT_EQ(phi_inv(P, phi(P, t)), t) << d << "," << k;
    }
}

TEST(PhiInv, RoundTripRandom) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 8; ++trial) {
    const TX t = testing::random_tx(rng, 10);
    EXPECT_EQ(phi_inv(P, phi(P, t)), t);
    const Plane p = testing::random_plane(rng, 10);
    EXPECT_EQ(phi(P, phi_inv(P, p)), p);
  }
}

TEST(Phi, IntertwinesMultiplicationByT) {
  std::mt19937_64 rng(6);
  const Plane lin = x + Plane::monomial(0, 1, u);
  for (int trial = 0; trial < 8; ++trial) {
    const TX t = testing::random_tx(rng, 6);
    TX tt;
    for (const auto& [k, c] : t.terms()) tt.add_term(k.first + 1, k.second, c);
    EXPECT_EQ(phi(P, tt), qp_mul(P, lin, phi(P, t)));
  }
}

TEST(TXPoly, RejectsTermsOutsideSubspace) {
  EXPECT_THROW(TX::monomial(1, 2), DomainError);
  EXPECT_NO_THROW(TX::monomial(2, 2));
}

}  // namespace
}  // namespace qsym
