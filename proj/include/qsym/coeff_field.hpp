#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <vector>

#include "qsym/point_value.hpp"
#include "qsym/scalar.hpp"
#include "qsym/weight.hpp"

namespace qsym {

template <class S>
S ipow(const S& base, int e) {
  if (e < 0) return ipow(S(1) / base, -e);
  S result(1);
  S b = base;
  while (e != 0) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e != 0) b = b * b;
  }
  return result;
}

// Re-split a freshly built binomial into factored form; identity for
// coefficient fields without a factored representation.
template <class S>
S refactor(const S& s) {
  return s;
}
inline Scalar refactor(const Scalar& s) {
  return s.factors().empty() ? Scalar::factored(s.rest()) : s;
}

/// The coefficient field together with the values standing for q,
/// u = q^lambda and v = q^lambda'. Every formula in the library is written
/// against this interface, so the same code runs symbolically (Scalar), at
/// an exact rational point (PointValue) or in floating point (double).
template <class S>
class QParams {
 public:
  QParams(S q, S u, S v)
      : q_(std::move(q)), u_(std::move(u)), v_(std::move(v)),
        qi_(S(1) / q_), ui_(S(1) / u_), vi_(S(1) / v_),
        cache_(std::make_shared<Cache>()) {}

  const S& q() const { return q_; }
  const S& u() const { return u_; }
  const S& v() const { return v_; }

  /// q^{a lambda + b lambda' + c} = u^a v^b q^c.
  S power(WeightExpr w) const {
    return signed_pow(u_, ui_, w.a) * signed_pow(v_, vi_, w.b) * signed_pow(q_, qi_, w.c);
  }
  S qpow(int c) const { return signed_pow(q_, qi_, c); }

  /// Symmetric q-binomial from the q-Pascal rule
  /// [n k] = q^k [n-1 k] + q^{k-n} [n-1 k-1]; zero outside 0 <= k <= n.
  S qbinom(int n, int k) const {
    if (n < 0 || k < 0 || k > n) return S(0);
    std::lock_guard lock(cache_->mu);
    auto& rows = cache_->binom;
    while (static_cast<int>(rows.size()) <= n) {
      const int m = static_cast<int>(rows.size());
      std::vector<S> row(static_cast<std::size_t>(m) + 1);
      row[0] = S(1);
      row[static_cast<std::size_t>(m)] = S(1);
      for (int j = 1; j < m; ++j) {
        row[static_cast<std::size_t>(j)] =
            qpow(j) * rows[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(j)] +
            qpow(j - m) * rows[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(j - 1)];
      }
      rows.push_back(std::move(row));
    }
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

 private:
  static S signed_pow(const S& x, const S& xi, int e) {
    return e >= 0 ? ipow(x, e) : ipow(xi, -e);
  }

  struct Cache {
    std::mutex mu;
    std::vector<std::vector<S>> binom;
  };

  S q_, u_, v_;
  S qi_, ui_, vi_;
  std::shared_ptr<Cache> cache_;
};

/// [w] = (q^w - q^{-w}) / (q - q^{-1}).
template <class S>
S qnum(const QParams<S>& P, WeightExpr w) {
  if (w == WeightExpr{}) return S(0);
  const S p = P.power(w);
  const S num = refactor(p - S(1) / p);
  const S den = refactor(P.q() - S(1) / P.q());
  return num / den;
}

/// [w]_n = prod_{s=0}^{n-1} [w + s].
template <class S>
S qpoch(const QParams<S>& P, WeightExpr w, int n) {
  S r(1);
  for (int s = 0; s < n; ++s) r = r * qnum(P, w + s);
  return r;
}

template <class S>
S qfact(const QParams<S>& P, int n) {
  return qpoch(P, WeightExpr::integer(1), n);
}

template <class S>
S qbinom(const QParams<S>& P, int n, int k) {
  return P.qbinom(n, k);
}

/// Symbolic parameters: q, u, v are the indeterminates themselves.
QParams<Scalar> symbolic_params();

/// Exact specialization (q0, u0, v0); all three must be non-zero.
QParams<PointValue> point_params(const Rational& q0, const Rational& u0, const Rational& v0);

/// Float parameters with u0 = q0^lambda0, v0 = q0^lambda0'.
QParams<double> float_params(double q0, double lambda0, double lambda0_prime);

struct SamplePoint {
  Rational q0, u0, v0;
};

/// Rational point with numerators and denominators drawn from [2, 97].
SamplePoint sample_point(std::mt19937_64& rng);

/// Exact value of s at the point; throws DenominatorVanishes at a pole.
Rational scalar_eval(const Scalar& s, const SamplePoint& pt);

}  // namespace qsym
