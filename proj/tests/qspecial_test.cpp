#include "qsym/qspecial.hpp"

#include <random>

#include "gtest/gtest.h"
#include "test_util.hpp"

namespace qsym {
namespace {

using Z = OnePoly<Scalar>;
using XP = XPoly<Scalar>;

const QParams<Scalar> P = symbolic_params();
const Scalar q = Scalar::monomial(1, 0, 0);

Scalar qn(int n) { return qnum(P, WeightExpr::integer(n)); }

// Direct difference quotient (f(z) - f(s z)) / ((1 - s) z) with s = q^c.
Z difference_quotient(const Z& f, int c) {
  const Z diff = f - dilate(P, f, WeightExpr::integer(c));
  const Scalar den = Scalar(1) - P.qpow(c);
  Z r;
  for (const auto& [n, a] : diff.terms()) {
    EXPECT_GT(n, 0);
    r.add_term(n - 1, a / den);
  }
  return r;
}

Z random_one(std::mt19937_64& rng, int deg) {
  Z p;
  for (int n = 0; n <= deg; ++n) p.add_term(n, Scalar(testing::random_poly(rng, 2, 2)));
  return p;
}

TEST(DqDeriv, Examples) {
  EXPECT_TRUE(dq_deriv(P, DerivStep::QSquared, Z(Scalar(1))).is_zero());
  EXPECT_EQ(dq_deriv(P, DerivStep::QSquared, Z::monomial(2)), Z::monomial(1, q * qn(2)));
  EXPECT_EQ(dq_deriv(P, DerivStep::QInvSquared, Z::monomial(3)),
            Z::monomial(2, P.qpow(-2) * qn(3)));
}

TEST(DqDeriv, MatchesDifferenceQuotient) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 4; ++trial) {
    const Z f = random_one(rng, 6);
    EXPECT_EQ(dq_deriv(P, DerivStep::QSquared, f), difference_quotient(f, 2));
    EXPECT_EQ(dq_deriv(P, DerivStep::QInvSquared, f), difference_quotient(f, -2));
    EXPECT_EQ(dq_deriv(P, DerivStep::Q, f), difference_quotient(f, 1));
  }
}

// D^n(fg)(X) = sum_k [n k] q^{-k(n-k)} f^{(k)}(q^{-2(n-k)} X) g^{(n-k)}(X), D = D_{q^{-2}}.
TEST(DqDeriv, QLeibniz) {
  std::mt19937_64 rng(12);
  auto iterate = [](Z f, int n) {
    for (int i = 0; i < n; ++i) f = dq_deriv(P, DerivStep::QInvSquared, f);
    return f;
  };
  for (int trial = 0; trial < 3; ++trial) {
    const Z f = random_one(rng, 3);
    const Z g = random_one(rng, 3);
    for (int n = 0; n <= 4; ++n) {
      Z rhs;
      for (int k = 0; k <= n; ++k)
        rhs += (P.qbinom(n, k) * P.qpow(-k * (n - k))) *
               (dilate(P, iterate(f, k), WeightExpr::integer(-2 * (n - k))) * iterate(g, n - k));
      EXPECT_EQ(iterate(f * g, n), rhs) << "n=" << n;
    }
  }
}

TEST(LittleQJacobi, Examples) {
  EXPECT_EQ(little_qjacobi(P, 0), XP(Scalar(1)));
  const Scalar c1 = -P.power(kBeta + 1) * qnum(P, kAlpha + kBeta + 2) / qnum(P, kAlpha + 1);
  EXPECT_EQ(little_qjacobi(P, 1), XP(Scalar(1)) + XP::monomial(1, c1));
  EXPECT_EQ(little_qjacobi_alt(P, 0, JacobiForm::Rodrigues), XP(Scalar(1)));
  EXPECT_EQ(little_qjacobi_alt(P, 0, JacobiForm::Remark), XP(Scalar(1)));
}

TEST(LittleQJacobi, ThreeFormsAgree) {
  for (int n = 0; n <= 10; ++n) {
    const XP j = little_qjacobi(P, n);
    EXPECT_EQ(j.degree(), n);
    EXPECT_EQ(little_qjacobi_alt(P, n, JacobiForm::Rodrigues), j) << "n=" << n;
    EXPECT_EQ(little_qjacobi_alt(P, n, JacobiForm::Remark), j) << "n=" << n;
  }
}

TEST(Theta, Examples) {
  EXPECT_TRUE(theta_apply(P, XP(Scalar(1))).is_zero());
  // Theta(X) from j_1 = 1 + c1 X: Theta(X) = ev_1 (X + 1/c1).
  const Scalar c1 = little_qjacobi(P, 1).coeff(1);
  const Scalar ev = theta_eigenvalue(P, 1);
  EXPECT_EQ(theta_apply(P, XP::monomial(1)), XP::monomial(1, ev) + XP(ev / c1));
  // and directly from the operator on f = X
  const Scalar qq = q - Scalar(1) / q;
  const Scalar pre = P.power(-(kAlpha + kBeta + 1)) / (qq * qq);
  const XP direct = pre * (P.power(2 * kAlpha) * (P.qpow(2) - Scalar(1)) *
                               (XP::monomial(1, P.power(2 * kBeta + 2)) - XP(Scalar(1))) -
                           (Scalar(1) - P.qpow(-2)) * (XP::monomial(1) - XP(Scalar(1))));
  EXPECT_EQ(theta_apply(P, XP::monomial(1)), direct);
}

TEST(Theta, EigenEquation) {
  for (int n = 0; n <= 10; ++n) {
    const XP j = little_qjacobi(P, n);
    EXPECT_EQ(theta_apply(P, j), theta_eigenvalue(P, n) * j) << "n=" << n;
  }
}

TEST(Theta, LowersOrKeepsDegree) {
  for (int j = 0; j <= 6; ++j) {
    const XP t = theta_apply(P, XP::monomial(j));
    for (const auto& [d, c] : t.terms()) EXPECT_TRUE(d == j || d == j - 1);
  }
}

TEST(QHahn, Examples) {
  for (int N = 1; N <= 6; ++N) {
    for (const Scalar& v : qhahn(P, 0, N).values) EXPECT_EQ(v, Scalar(1));
    for (int k = 0; k <= N; ++k) EXPECT_EQ(qhahn(P, k, N).values[0], Scalar(1));
    const auto top = qhahn(P, N, N);
    ASSERT_EQ(top.values.size(), static_cast<std::size_t>(N) + 1);
    for (int l = 0; l <= N; ++l)
      EXPECT_EQ(top.values[static_cast<std::size_t>(l)], qhahn_top_closed_form(P, N, l)) << N << " " << l;
  }
  EXPECT_THROW(qhahn(P, 3, 2), IndexOutOfRange);
  EXPECT_THROW(qhahn(P, -1, 2), IndexOutOfRange);
}

// With [alpha+1]_N in place of [alpha+1]_l the value at l = 0 would be
// 1/[alpha+1]_N, contradicting Q_N(1) = 1.
TEST(QHahn, TopClosedFormNeedsPochhammerInL) {
  const int N = 3;
  const Scalar literal = qpoch(P, kBeta + 1, N) / (qpoch(P, kAlpha + 1, N) * qpoch(P, kBeta + 1, N));
  EXPECT_NE(qhahn(P, N, N).values[0], literal);
  EXPECT_EQ(qhahn(P, N, N).values[0], qhahn_top_closed_form(P, N, 0));
  EXPECT_THROW(qhahn(P, -1, 2), IndexOutOfRange);
}

TEST(QHahn, PolynomialFormMatchesGrid) {
  for (int N = 1; N <= 5; ++N)
    for (int k = 0; k <= N; ++k) {
      const XP poly = qhahn_poly(P, k, N);
      EXPECT_EQ(poly.degree(), k);
      const auto g = qhahn(P, k, N);
      for (int l = 0; l <= N; ++l)
        EXPECT_EQ(evaluate(poly, P.qpow(-2 * l)), g.values[static_cast<std::size_t>(l)]);
    }
}

TEST(QHahn, DifferenceEquation) {
  for (int N = 1; N <= 6; ++N)
    for (int k = 0; k <= N; ++k) {
      const Report r = qhahn_diffop_check(P, k, N);
      EXPECT_TRUE(r.ok) << r.counterexample;
    }
}

TEST(QHahn, DifferenceEquationNegativeControl) {
  const int N = 4;
  for (int k = 0; k <= N; ++k) {
    std::vector<Scalar> ext;
    for (int l = -1; l <= N + 1; ++l) ext.push_back(qhahn_value(P, k, N, l));
    ext[3] = ext[3] + Scalar(1);
    Checker c("perturbed");
    qhahn_diffop_holds(c, P, k, N, ext);
    EXPECT_FALSE(c.ok());
  }
  EXPECT_FALSE(qhahn_diffop_check(P, 2, 3, true).ok);
}

TEST(QHahn, TridiagonalRecurrence) {
  for (int N = 1; N <= 6; ++N) {
    const auto res = qhahn_tridiagonal_check(P, N);
    EXPECT_TRUE(res.report.ok) << res.report.counterexample;
    // C_0 = 0: X Q_0 has no component outside Q_0, Q_1
    const auto& row0 = res.coefficients.at(0);
    for (std::size_t j = 2; j < row0.size(); ++j) EXPECT_TRUE(row0[j].is_zero());
    EXPECT_FALSE(row0[1].is_zero());
  }
  EXPECT_FALSE(qhahn_tridiagonal_check(P, 3, true).report.ok);
}

TEST(QHahn, TridiagonalPointMode) {
  std::mt19937_64 rng(13);
  const auto pt = sample_point(rng);
  const auto PP = point_params(pt.q0, pt.u0, pt.v0);
  EXPECT_TRUE(qhahn_tridiagonal_check(PP, 6).report.ok);
}

}  // namespace
}  // namespace qsym
