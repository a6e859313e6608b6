#include "qsym/qhahn_algebra.hpp"

#include <random>

#include "gtest/gtest.h"

namespace qsym {
namespace {

const QParams<Scalar> P = symbolic_params();

TEST(QHahnAlgebra, BothRealizationsSatisfyRelations) {
  for (int N = 0; N <= 6; ++N)
    for (Realization r : {Realization::TXPicture, Realization::Tensor}) {
      const Report rep = qhahn_algebra_check(P, r, N);
      EXPECT_TRUE(rep.ok) << realization_name(r) << " N=" << N << ": " << rep.counterexample;
    }
}

TEST(QHahnAlgebra, RealizationsAgreeOnU) {
  // U is diagonal with q^{-2l} in both bases, so the two matrices coincide.
  for (int N = 1; N <= 4; ++N) {
    const auto tx = qhahn_pair(P, Realization::TXPicture, N);
    const auto pl = qhahn_pair(P, Realization::Tensor, N);
    Checker c("u-agree");
    EXPECT_TRUE(equal_matrices(c, tx.U.m, pl.U.m, "U"));
  }
}

TEST(QHahnAlgebra, VIsTridiagonalInUEigenbasis) {
  for (Realization r : {Realization::TXPicture, Realization::Tensor}) {
    const auto pair = qhahn_pair(P, r, 5);
    for (Eigen::Index i = 0; i < pair.V.m.rows(); ++i)
      for (Eigen::Index j = 0; j < pair.V.m.cols(); ++j)
        if (std::abs(static_cast<long>(i - j)) > 1) EXPECT_TRUE(is_zero(pair.V.m(i, j))) << i << "," << j;
  }
}

TEST(QHahnAlgebra, TransportedBasisMatchesPhiInverse) {
  // phi^{-1}(x^l y^{N-l}) = q^{-(N-l)(lambda+2l)} t^N e_l.
  const int N = 4;
  for (int l = 0; l <= N; ++l) {
    const TXPoly<Scalar> img = phi_inv(P, QPlanePoly<Scalar>::monomial(l, N - l));
    const XPoly<Scalar> e = transported_basis_vector(P, N, l);
    TXPoly<Scalar> expected;
    for (const auto& [d, c] : e.terms())
      expected.add_term(N, d, P.power({-(N - l), 0, -2 * l * (N - l)}) * c);
    EXPECT_EQ(img, expected) << "l=" << l;
  }
}

TEST(QHahnAlgebra, WrongConstantIsDetected) {
  for (Realization r : {Realization::TXPicture, Realization::Tensor}) {
    const Report rep = qhahn_algebra_check(P, r, 3, true);
    EXPECT_FALSE(rep.ok);
    EXPECT_FALSE(rep.counterexample.empty());
  }
}

TEST(QHahnAlgebra, PointModeAgrees) {
  std::mt19937_64 rng(7);
  const SamplePoint pt = sample_point(rng);
  const auto Q = point_params(pt.q0, pt.u0, pt.v0);
  for (Realization r : {Realization::TXPicture, Realization::Tensor})
    EXPECT_TRUE(qhahn_algebra_check(Q, r, 6).ok);
}

}  // namespace
}  // namespace qsym
