#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qsym/check.hpp"
#include "qsym/linalg.hpp"
#include "qsym/quantum_plane.hpp"

namespace qsym {

class IndexOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Step of the difference quotient D_s f(z) = (f(z) - f(s z)) / ((1 - s) z).
enum class DerivStep { QSquared, QInvSquared, Q };

/// D_s z^n = (1 + s + ... + s^{n-1}) z^{n-1}.
template <class S>
S dq_factor(const QParams<S>& P, DerivStep step, int n) {
  if (n <= 0) return S(0);
  switch (step) {
    case DerivStep::QSquared:
      return P.qpow(n - 1) * qnum(P, WeightExpr::integer(n));
    case DerivStep::QInvSquared:
      return P.qpow(1 - n) * qnum(P, WeightExpr::integer(n));
    case DerivStep::Q:
      break;
  }
  S sum(0);
  for (int i = 0; i < n; ++i) sum = sum + P.qpow(i);
  return refactor(sum);
}

template <class S, class Var>
Poly1<S, Var> dq_deriv(const QParams<S>& P, DerivStep step, const Poly1<S, Var>& p) {
  Poly1<S, Var> r;
  for (const auto& [n, c] : p.terms())
    if (n > 0) r.add_term(n - 1, dq_factor(P, step, n) * c);
  return r;
}

/// f(z) -> f(c z) for c = q^w: the degree-m coefficient gets q^{m w}.
template <class S, class Var>
Poly1<S, Var> dilate(const QParams<S>& P, const Poly1<S, Var>& p, WeightExpr w) {
  Poly1<S, Var> r;
  for (const auto& [n, c] : p.terms()) r.add_term(n, P.power(n * w) * c);
  return r;
}

template <class S, class Var>
S evaluate(const Poly1<S, Var>& p, const S& x) {
  S r(0);
  int deg = p.degree();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    for (; deg > it->first; --deg) r = r * x;
    r = r + it->second;
  }
  for (; deg > 0; --deg) r = r * x;
  return r;
}

/// Little q-Jacobi polynomial with alpha = lambda - 1, beta = lambda' - 1:
/// sum_k [-n]_k [n+alpha+beta+1]_k / [alpha+1]_k q^{k(beta+1)} X^k / [k]!.
template <class S>
XPoly<S> little_qjacobi(const QParams<S>& P, int n) {
  XPoly<S> r;
  for (int k = 0; k <= n; ++k) {
    const S c = qpoch(P, WeightExpr::integer(-n), k) * qpoch(P, kAlpha + kBeta + (n + 1), k) /
                (qpoch(P, kAlpha + 1, k) * qfact(P, k)) * P.power(k * (kBeta + 1));
    r.add_term(k, c);
  }
  return r;
}

/// The two finite expansions derived from the Rodrigues formula.
enum class JacobiForm { Rodrigues, Remark };

template <class S>
XPoly<S> little_qjacobi_alt(const QParams<S>& P, int n, JacobiForm form) {
  XPoly<S> r;
  for (int k = 0; k <= n; ++k) {
    const WeightExpr e = form == JacobiForm::Rodrigues ? k * (kBeta + kAlpha + (1 + k))
                                                       : k * (kBeta - kAlpha + (1 - k));
    S c = P.qbinom(n, k) * P.power(e) /
          (qpoch(P, kAlpha + 1, k) * qpoch(P, kBeta + 1, n - k));
    if (k % 2 != 0) c = -c;
    XPoly<S> prod;
    if (form == JacobiForm::Rodrigues) {
      prod = falling_product(P, n - k);
    } else {
      prod = XPoly<S>(S(1));
      for (int s = 1; s <= n - k; ++s) {
        XPoly<S> f(S(1));
        f.add_term(1, -P.power(2 * (kBeta + s)));
        prod = prod * f;
      }
    }
    for (const auto& [d, e2] : prod.terms()) r.add_term(d + k, c * e2);
  }
  return qpoch(P, kBeta + 1, n) * r;
}

namespace detail {
/// Exact division by X of a polynomial without constant term.
template <class S>
XPoly<S> divide_by_x(const XPoly<S>& p) {
  XPoly<S> r;
  for (const auto& [n, c] : p.terms()) {
    if (n == 0) throw std::logic_error("theta_apply: difference quotient not divisible by X");
    r.add_term(n - 1, c);
  }
  return r;
}
}  // namespace detail

/// Second-order q-difference operator having the little q-Jacobi
/// polynomials as eigenvectors:
/// q^{-a-b-1}/(q-q^{-1})^2 (q^{2a}(q^{2b+2}X - 1)(f(q^2X) - f(X))/X - (X - 1)(f(X) - f(q^{-2}X))/X).
template <class S>
XPoly<S> theta_apply(const QParams<S>& P, const XPoly<S>& f) {
  const XPoly<S> up = detail::divide_by_x(dilate(P, f, WeightExpr::integer(2)) - f);
  const XPoly<S> down = detail::divide_by_x(f - dilate(P, f, WeightExpr::integer(-2)));
  XPoly<S> left = XPoly<S>::monomial(1, P.power(2 * kBeta + 2)) - XPoly<S>(S(1));
  XPoly<S> right = XPoly<S>::monomial(1) - XPoly<S>(S(1));
  const S qq = P.q() - S(1) / P.q();
  const S pre = P.power(-(kAlpha + kBeta + 1)) / (qq * qq);
  return pre * (P.power(2 * kAlpha) * (left * up) - right * down);
}

/// [alpha+beta+n+1][n].
template <class S>
S theta_eigenvalue(const QParams<S>& P, int n) {
  return qnum(P, kAlpha + kBeta + (n + 1)) * qnum(P, WeightExpr::integer(n));
}

/// Hypergeometric sum = Rodrigues expansion = Remark expansion, degree exactly n.
template <class S>
Report jacobi_forms_check(const QParams<S>& P, int n, bool poison = false) {
  Checker c("jacobi-forms", poison);
  c.param("n", n);
  const XPoly<S> j = little_qjacobi(P, n);
  if (!c.equal(little_qjacobi_alt(P, n, JacobiForm::Rodrigues), j, "expansion form")) return c.report();
  if (!c.equal(little_qjacobi_alt(P, n, JacobiForm::Remark), j, "alternative expansion form")) return c.report();
  c.require(j.degree() == n, "degree of j_" + std::to_string(n));
  return c.report();
}

/// Theta j_n = [alpha+beta+n+1][n] j_n.
template <class S>
Report jacobi_eigen_check(const QParams<S>& P, int n, bool poison = false) {
  Checker c("jacobi-eigen", poison);
  c.param("n", n);
  const XPoly<S> j = little_qjacobi(P, n);
  c.equal(theta_apply(P, j), theta_eigenvalue(P, n) * j, "Theta j_" + std::to_string(n));
  return c.report();
}

/// Values of a q-Hahn polynomial on the grid X = q^{-2l}, l = 0..N.
template <class S>
struct GridFunction {
  int N = 0;
  int k = 0;
  std::vector<S> values;
};

/// Q_k^{(N)}(q^{-2l}) by the terminating sum; l may lie outside 0..N
/// (used to extend the grid by one point on each side).
template <class S>
S qhahn_value(const QParams<S>& P, int k, int N, int l) {
  S r(0);
  for (int i = 0; i <= k; ++i) {
    S c = P.qbinom(k, i) * P.power({0, i, i * (N - l)}) * qpoch(P, kAlpha + kBeta + (k + 1), i) *
          qpoch(P, WeightExpr::integer(-l), i) /
          (qpoch(P, kAlpha + 1, i) * qpoch(P, WeightExpr::integer(-N), i));
    r = (i % 2 == 0) ? r + c : r - c;
  }
  return r;
}

template <class S>
GridFunction<S> qhahn(const QParams<S>& P, int k, int N) {
  if (N < 1) throw IndexOutOfRange("qhahn: N must be positive");
  if (k < 0 || k > N) throw IndexOutOfRange("qhahn: k must lie in 0..N");
  GridFunction<S> g{N, k, {}};
  for (int l = 0; l <= N; ++l) g.values.push_back(qhahn_value(P, k, N, l));
  return g;
}

/// Q_k^{(N)} as a polynomial in X = q^{-2x}: the factor [-x]_i q^{-ix}
/// becomes prod_{s<i} (q^s X - q^{-s}) / (q - q^{-1}).
template <class S>
XPoly<S> qhahn_poly(const QParams<S>& P, int k, int N) {
  if (k < 0 || k > N) throw IndexOutOfRange("qhahn_poly: k must lie in 0..N");
  const S qq = refactor(P.q() - S(1) / P.q());
  XPoly<S> r;
  XPoly<S> prod(S(1));
  for (int i = 0; i <= k; ++i) {
    if (i > 0) {
      XPoly<S> f = XPoly<S>::monomial(1, P.qpow(i - 1) / qq);
      f.add_term(0, -P.qpow(1 - i) / qq);
      prod = prod * f;
    }
    S c = P.qbinom(k, i) * P.power({0, i, i * N}) * qpoch(P, kAlpha + kBeta + (k + 1), i) /
          (qpoch(P, kAlpha + 1, i) * qpoch(P, WeightExpr::integer(-N), i));
    if (i % 2 != 0) c = -c;
    r += c * prod;
  }
  return r;
}

/// Closed form of the top q-Hahn polynomial on the grid:
/// (-1)^l q^{l(a+b+N+1)} [b+1]_N / ([a+1]_l [b+1]_{N-l}).
/// Obtained by matching the k = N case of the X-picture Clebsch-Gordan
/// expansion against the Rodrigues-type expansion of j_N coefficient by
/// coefficient.
template <class S>
S qhahn_top_closed_form(const QParams<S>& P, int N, int l) {
  S c = P.power(l * (kAlpha + kBeta + (N + 1))) * qpoch(P, kBeta + 1, N) /
        (qpoch(P, kAlpha + 1, l) * qpoch(P, kBeta + 1, N - l));
  return l % 2 == 0 ? c : -c;
}

/// Q_N^{(N)} from the terminating sum against its closed form on the grid.
template <class S>
Report qhahn_top_check(const QParams<S>& P, int N, bool poison = false) {
  Checker c("qhahn-top-closed-form", poison);
  c.param("N", N);
  const GridFunction<S> Q = qhahn(P, N, N);
  for (int l = 0; l <= N; ++l)
    if (!c.equal(Q.values[static_cast<std::size_t>(l)], qhahn_top_closed_form(P, N, l), "l=" + std::to_string(l)))
      break;
  return c.report();
}

/// Difference-equation parameters a = q^{2 alpha}, b = q^{2 beta}.
template <class S>
S hahn_a(const QParams<S>& P) {
  return P.power(2 * kAlpha);
}
template <class S>
S hahn_b(const QParams<S>& P) {
  return P.power(2 * kBeta);
}

/// Checks B Q(q^{-2}X) + M Q(X) + D Q(q^2 X) = (q^{-2k} + ab q^{2k+2}) Q(X)
/// at X = q^{-2l}, l = 0..N, given the values on l = -1..N+1
/// (ext[l + 1] = Q(q^{-2l})).
template <class S>
void qhahn_diffop_holds(Checker& c, const QParams<S>& P, int k, int N, const std::vector<S>& ext) {
  const S a = hahn_a(P);
  const S b = hahn_b(P);
  const S q2 = P.qpow(2);
  const S eigen = P.qpow(-2 * k) + a * b * P.qpow(2 * k + 2);
  for (int l = 0; l <= N; ++l) {
    const S xi = P.qpow(2 * l);  // X^{-1}
    const S B = (S(1) - P.qpow(-2 * N) * xi) * (S(1) - a * q2 * xi);
    const S D = a * q2 * (S(1) - xi) * (b - P.qpow(-2 * (N + 1)) * xi);
    const S M = -B - D + S(1) + a * b * q2;
    const auto at = [&](int m) { return ext[static_cast<std::size_t>(m + 1)]; };
    const S lhs = B * at(l + 1) + M * at(l) + D * at(l - 1);
    if (!c.equal(lhs, eigen * at(l), "k=" + std::to_string(k) + " N=" + std::to_string(N) +
                                         " at X=q^{-2*" + std::to_string(l) + "}"))
      return;
  }
}

template <class S>
Report qhahn_diffop_check(const QParams<S>& P, int k, int N, bool poison = false) {
  if (k < 0 || k > N) throw IndexOutOfRange("qhahn_diffop_check: k must lie in 0..N");
  Checker c("qhahn-diffop", poison);
  c.param("k", k).param("N", N);
  std::vector<S> ext;
  for (int l = -1; l <= N + 1; ++l) ext.push_back(qhahn_value(P, k, N, l));
  qhahn_diffop_holds(c, P, k, N, ext);
  return c.report();
}

/// Coefficients of X Q_k in the basis {Q_j}, row k = (c_0, ..., c_N).
template <class S>
struct TridiagonalResult {
  Report report;
  std::vector<std::vector<S>> coefficients;
};

/// Expands X Q_k (k = 0..N-1) in {Q_j}_{j=0..N} and checks the support
/// lies in {k-1, k, k+1}. The Q_j are used as polynomials in X: degree j
/// with non-zero leading coefficient for generic parameters, so the change
/// of basis is triangular. Each expansion is re-checked on the grid.
template <class S>
TridiagonalResult<S> qhahn_tridiagonal_check(const QParams<S>& P, int N, bool poison = false) {
  if (N < 1) throw IndexOutOfRange("qhahn_tridiagonal_check: N must be positive");
  TridiagonalResult<S> out{Report{}, {}};
  Checker c("qhahn-tridiagonal", poison);
  c.param("N", N);
  std::vector<XPoly<S>> basis;
  for (int j = 0; j <= N; ++j) {
    basis.push_back(qhahn_poly(P, j, N));
    if (basis.back().degree() != j) throw SingularBasis("q-Hahn polynomials are linearly dependent");
  }
  for (int k = 0; k < N; ++k) {
    XPoly<S> rem = XPoly<S>::monomial(1) * basis[static_cast<std::size_t>(k)];
    std::vector<S> coeffs(static_cast<std::size_t>(N) + 1, S(0));
    for (int j = N; j >= 0; --j) {
      const auto& bj = basis[static_cast<std::size_t>(j)];
      const S cj = rem.coeff(j) / bj.coeff(j);
      coeffs[static_cast<std::size_t>(j)] = cj;
      if (!is_zero(cj)) rem -= cj * bj;
    }
    c.require(rem.is_zero(), "X Q_" + std::to_string(k) + " not in the span");
    std::vector<S> support(coeffs.size(), S(0));
    for (int j = std::max(0, k - 1); j <= std::min(N, k + 1); ++j)
      support[static_cast<std::size_t>(j)] = coeffs[static_cast<std::size_t>(j)];
    c.equal(coeffs, support, "support of X Q_" + std::to_string(k));
    for (int l = 0; l <= N; ++l) {
      S lhs(0);
      for (int j = 0; j <= N; ++j)
        if (!is_zero(coeffs[static_cast<std::size_t>(j)]))
          lhs = lhs + coeffs[static_cast<std::size_t>(j)] * qhahn_value(P, j, N, l);
      c.equal(lhs, P.qpow(-2 * l) * qhahn_value(P, k, N, l),
              "grid recheck k=" + std::to_string(k) + " l=" + std::to_string(l));
    }
    out.coefficients.push_back(std::move(coeffs));
  }
  out.report = c.report();
  return out;
}

}  // namespace qsym
