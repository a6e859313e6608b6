#pragma once

#include "qsym/check.hpp"
#include "qsym/poly.hpp"

namespace qsym {

/// Normal-ordered product in C_q[x, y] with yx = q^2 xy:
/// (x^a y^b)(x^c y^d) = q^{2bc} x^{a+c} y^{b+d}.
template <class S>
QPlanePoly<S> qp_mul(const QParams<S>& P, const QPlanePoly<S>& A, const QPlanePoly<S>& B) {
  QPlanePoly<S> r;
  for (const auto& [ka, ca] : A.terms())
    for (const auto& [kb, cb] : B.terms())
      r.add_term(ka.first + kb.first, ka.second + kb.second,
                 P.qpow(2 * ka.second * kb.first) * ca * cb);
  return r;
}

/// (x + c y)^n by the q-binomial formula
/// sum_k [n k] q^{k(n-k)} c^{n-k} x^k y^{n-k}.
template <class S>
QPlanePoly<S> qp_pow_linear(const QParams<S>& P, const S& c, int n) {
  QPlanePoly<S> r;
  for (int k = 0; k <= n; ++k)
    r.add_term(k, n - k, P.qbinom(n, k) * P.qpow(k * (n - k)) * ipow(c, n - k));
  return r;
}

/// prod_{s=0}^{p-1} (1 - q^{-2s} X), expanded.
template <class S>
XPoly<S> falling_product(const QParams<S>& P, int p) {
  XPoly<S> r(S(1));
  for (int s = 0; s < p; ++s) {
    XPoly<S> f(S(1));
    f.add_term(1, -P.qpow(-2 * s));
    r = r * f;
  }
  return r;
}

/// phi: C[t, tX] -> C_q[x, y], linear extension of
/// t^n (tX)^m -> (x + q^lambda y)^n x^m. Basis key (i, j) = (n + m, m).
template <class S>
QPlanePoly<S> phi(const QParams<S>& P, const TXPoly<S>& T) {
  QPlanePoly<S> r;
  for (const auto& [key, c] : T.terms()) {
    const auto [i, j] = key;
    const auto img = qp_mul(P, qp_pow_linear(P, P.u(), i - j), QPlanePoly<S>::monomial(j, 0));
    r += c * img;
  }
  return r;
}

/// phi^{-1}(x^k y^p) = q^{-p(lambda + 2k)} t^{k+p} prod_{s<p}(1 - q^{-2s} X) X^k.
template <class S>
TXPoly<S> phi_inv(const QParams<S>& P, const QPlanePoly<S>& Q) {
  TXPoly<S> r;
  for (const auto& [key, c] : Q.terms()) {
    const auto [k, p] = key;
    const S scale = c * P.power({-p, 0, -2 * p * k});
    const XPoly<S> fall = falling_product(P, p);
    for (const auto& [d, e] : fall.terms()) r.add_term(k + p, k + d, scale * e);
  }
  return r;
}

/// phi^{-1} o phi = id and phi o phi^{-1} = id on every basis monomial of
/// total degree <= max_degree.
template <class S>
Report phi_bijection_check(const QParams<S>& P, int max_degree, bool poison = false) {
  Checker c("phi-bijection", poison);
  c.param("max_degree", max_degree);
  for (int d = 0; d <= max_degree; ++d)
    for (int k = 0; k <= d; ++k) {
      const auto b = QPlanePoly<S>::monomial(k, d - k);
      if (!c.equal(phi(P, phi_inv(P, b)), b, "phi(phi^-1(x^" + std::to_string(k) + " y^" + std::to_string(d - k) + "))"))
        return c.report();
      const auto t = TXPoly<S>::monomial(d, k);
      if (!c.equal(phi_inv(P, phi(P, t)), t, "phi^-1(phi(t^" + std::to_string(d) + " X^" + std::to_string(k) + "))"))
        return c.report();
    }
  return c.report();
}

/// phi(t P) = (x + uy) phi(P) on every basis element with t-degree <= max_degree.
template <class S>
Report phi_t_multiplication_check(const QParams<S>& P, int max_degree, bool poison = false) {
  Checker c("phi-t-multiplication", poison);
  c.param("max_degree", max_degree);
  const auto lin = qp_pow_linear(P, P.u(), 1);
  for (int i = 0; i <= max_degree; ++i)
    for (int j = 0; j <= i; ++j) {
      const auto b = TXPoly<S>::monomial(i, j);
      if (!c.equal(phi(P, TXPoly<S>::monomial(i + 1, j)), qp_mul(P, lin, phi(P, b)),
                   "t^" + std::to_string(i) + " X^" + std::to_string(j)))
        return c.report();
    }
  return c.report();
}

}  // namespace qsym
