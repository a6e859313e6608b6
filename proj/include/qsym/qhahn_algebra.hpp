#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qsym/intertwiners.hpp"
#include "qsym/qspecial.hpp"

namespace qsym {

/// Where the pair (U, V) acts on the weight-N space.
enum class Realization { TXPicture, Tensor };

inline const char* realization_name(Realization r) {
  return r == Realization::TXPicture ? "txpicture" : "tensor";
}

/// U and V on the weight-N space, in the basis of K (x) 1 eigenvectors
/// (x^l y^{N-l} in the plane, their transports in the X picture).
template <class S>
struct QHahnPair {
  OpMatrix<S> U;
  OpMatrix<S> V;
};

/// prod_{s<N-l}(1 - q^{-2s}X) X^l, the X-picture image of x^l y^{N-l} up to scale.
template <class S>
XPoly<S> transported_basis_vector(const QParams<S>& P, int N, int l) {
  return falling_product(P, N - l) * XPoly<S>::monomial(l);
}

/// U = q^{-2N}X + (1 - X)T_{q^{-2}}.
template <class S>
XPoly<S> qhahn_U_tx(const QParams<S>& P, int N, const XPoly<S>& f) {
  const XPoly<S> shifted = dilate(P, f, WeightExpr::integer(-2));
  return XPoly<S>::monomial(1, P.qpow(-2 * N)) * f + (XPoly<S>(S(1)) - XPoly<S>::monomial(1)) * shifted;
}

/// V = q^{alpha+beta+1}(q - q^{-1})^2 Theta + q^{2alpha+2beta+2} + 1.
template <class S>
XPoly<S> qhahn_V_tx(const QParams<S>& P, const XPoly<S>& f) {
  const S qq = P.q() - S(1) / P.q();
  return (P.power(kAlpha + kBeta + 1) * qq * qq) * theta_apply(P, f) +
         (P.power(2 * (kAlpha + kBeta + 1)) + S(1)) * f;
}

/// U = q^lambda K^{-1} (x) 1.
template <class S>
QPlanePoly<S> qhahn_U_tensor(const QParams<S>& P, const QPlanePoly<S>& p) {
  QPlanePoly<S> r;
  for (const auto& [key, c] : p.terms())
    r.add_term(key.first, key.second, P.qpow(-2 * key.first) * c);
  return r;
}

/// V = q^{lambda+lambda'-1} Delta(C).
template <class S>
QPlanePoly<S> qhahn_V_tensor(const QParams<S>& P, const QPlanePoly<S>& p) {
  return P.power(WeightExpr{1, 1, -1}) * casimir_tensor(P, p);
}

namespace detail {
/// Coordinates of f in the transported basis. Basis vector l has lowest
/// term X^l with coefficient 1, so peeling lowest terms is exact.
template <class S>
std::vector<S> transported_coordinates(const QParams<S>& P, int N, XPoly<S> f) {
  std::vector<S> out(static_cast<std::size_t>(N) + 1, S(0));
  while (!f.is_zero()) {
    const auto& [l, c] = *f.terms().begin();
    if (l > N) throw TruncationLeak("image leaves the weight-N space");
    const S coeff = c;
    const int deg = l;
    out[static_cast<std::size_t>(deg)] = coeff;
    f -= coeff * transported_basis_vector(P, N, deg);
  }
  return out;
}
}  // namespace detail

template <class S>
QHahnPair<S> qhahn_pair(const QParams<S>& P, Realization r, int N) {
  if (N < 0) throw IndexOutOfRange("qhahn_pair: N must be non-negative");
  const auto n1 = static_cast<Eigen::Index>(N) + 1;
  std::vector<std::string> labels;
  for (int l = 0; l <= N; ++l)
    labels.push_back(r == Realization::Tensor ? "x^" + std::to_string(l) + "*y^" + std::to_string(N - l)
                                              : "e_" + std::to_string(l));
  QHahnPair<S> out{{labels, labels, zero_matrix<S>(n1, n1)}, {labels, labels, zero_matrix<S>(n1, n1)}};
  for (int l = 0; l <= N; ++l) {
    if (r == Realization::TXPicture) {
      const XPoly<S> e = transported_basis_vector(P, N, l);
      const auto cu = detail::transported_coordinates(P, N, qhahn_U_tx(P, N, e));
      const auto cv = detail::transported_coordinates(P, N, qhahn_V_tx(P, e));
      for (int i = 0; i <= N; ++i) {
        out.U.m(i, l) = cu[static_cast<std::size_t>(i)];
        out.V.m(i, l) = cv[static_cast<std::size_t>(i)];
      }
    } else {
      const auto e = QPlanePoly<S>::monomial(l, N - l);
      const auto fill = [&](Mat<S>& m, const QPlanePoly<S>& img) {
        for (const auto& [key, c] : img.terms()) {
          if (key.first + key.second != N) throw TruncationLeak("image leaves the weight-N space");
          m(key.first, l) = c;
        }
      };
      fill(out.U.m, qhahn_U_tensor(P, e));
      fill(out.V.m, qhahn_V_tensor(P, e));
    }
  }
  return out;
}

/// Constants of the q-Hahn algebra relations at level N.
template <class S>
S qhahn_x1(const QParams<S>& P, int N) {
  const S a = hahn_a(P);
  const S b = hahn_b(P);
  return P.qpow(-2 * N) * (S(1) + a + a * P.qpow(2 + 2 * N) + a * b * P.qpow(2 + 2 * N));
}
template <class S>
S qhahn_x2(const QParams<S>& P, int N) {
  const S a = hahn_a(P);
  const S b = hahn_b(P);
  return P.qpow(-2 * N) * (S(1) + b + b * P.qpow(2 + 2 * N) + a * b * P.qpow(2 + 2 * N));
}

/// [A, B]_q / (q - q^{-1}) with [A, B]_q = qAB - q^{-1}BA.
template <class S>
Mat<S> q_commutator(const QParams<S>& P, const Mat<S>& A, const Mat<S>& B) {
  const S qq = P.q() - S(1) / P.q();
  const Mat<S> r = mat_scale(P.q(), mat_mul(A, B)) - mat_scale(S(1) / P.q(), mat_mul(B, A));
  return mat_scale(S(1) / qq, r);
}

/// Defines W from the first relation and checks the other two, then the
/// spectra: U diagonal with q^{-2l}, V with eigenvalues q^{-2k} + ab q^{2k+2}
/// on the little q-Jacobi polynomials (X picture) or the Psi vectors (plane).
template <class S>
Report qhahn_algebra_check(const QParams<S>& P, Realization r, int N, bool poison = false) {
  Checker c("qhahn-algebra", poison);
  c.param("realization", realization_name(r)).param("N", N);
  const auto pair = qhahn_pair(P, r, N);
  const Mat<S>& U = pair.U.m;
  const Mat<S>& V = pair.V.m;
  const auto n1 = U.rows();
  const Mat<S> I = identity_matrix<S>(n1);
  const S a = hahn_a(P);
  const S b = hahn_b(P);
  const S one_q2 = S(1) + P.qpow(2);
  const S x1 = qhahn_x1(P, N);
  const S x2 = qhahn_x2(P, N);

  const Mat<S> W = q_commutator(P, V, U);
  const Mat<S> rhs2 = mat_scale(x1, U) - mat_scale(a * P.qpow(-2 * N) * one_q2, I);
  if (!equal_matrices(c, q_commutator(P, U, W), rhs2, "[U,W]_q relation", pair.U.rows, pair.U.cols))
    return c.report();
  const Mat<S> rhs3 = mat_scale(x1, V) + mat_scale(a * b * one_q2 * one_q2, U) - mat_scale(a * one_q2 * x2, I);
  if (!equal_matrices(c, q_commutator(P, W, V), rhs3, "[W,V]_q relation", pair.U.rows, pair.U.cols))
    return c.report();

  Mat<S> spec_u = zero_matrix<S>(n1, n1);
  for (Eigen::Index l = 0; l < n1; ++l) spec_u(l, l) = P.qpow(-2 * static_cast<int>(l));
  if (!equal_matrices(c, U, spec_u, "Sp(U)", pair.U.rows, pair.U.cols)) return c.report();

  for (int k = 0; k <= N; ++k) {
    const S eigen = P.qpow(-2 * k) + a * b * P.qpow(2 * k + 2);
    const std::string where = "V eigenvector k=" + std::to_string(k);
    if (r == Realization::TXPicture) {
      const XPoly<S> j = little_qjacobi(P, k);
      if (!c.equal(qhahn_V_tx(P, j), eigen * j, where)) break;
    } else {
      const QPlanePoly<S> w = psi_plane(P, k, N - k);
      if (!c.equal(qhahn_V_tensor(P, w), eigen * w, where)) break;
    }
  }
  return c.report();
}

}  // namespace qsym
