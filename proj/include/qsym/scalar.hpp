#pragma once

#include <memory>
#include <stdexcept>
#include <ostream>
#include <string>
#include <vector>

#include "qsym/laurent_poly.hpp"

namespace qsym {

/// Raised when a specialization point hits a pole. Callers in random-point
/// mode treat it as a signal to resample.
class DenominatorVanishes : public std::domain_error {
 public:
  DenominatorVanishes() : std::domain_error("denominator vanishes at the evaluation point") {}
};

/// Exact element of Q(q, u, v), u = q^lambda, v = q^lambda'.
///
/// Stored as prod_i f_i^{e_i} * rest, where the f_i are normalized
/// (primitive, positive leading coefficient) Laurent polynomials with
/// non-zero integer exponents and rest is an expanded Laurent polynomial.
/// Binomial factors are split into cyclotomic pieces on entry so products
/// of q-numbers cancel structurally; sums bring operands to the gcd of
/// their factored parts and then trial-divide the new rest by the
/// denominator factors. The representation is not canonical: equality is
/// decided by cross-multiplication (a - b == 0).
class Scalar {
 public:
  using FactorPtr = std::shared_ptr<const LaurentPoly>;
  struct Factor {
    FactorPtr poly;
    int exp;
  };

  Scalar() = default;
  Scalar(long c) : rest_(c) {}  // NOLINT(google-explicit-constructor)
  Scalar(int c) : rest_(static_cast<long>(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(Rational c) : rest_(std::move(c)) {}
  explicit Scalar(LaurentPoly p) : rest_(std::move(p)) {}

  static Scalar monomial(int eq, int eu, int ev, Rational c = 1);
  /// Builds p with its unit part and binomial factors pulled out.
  static Scalar factored(const LaurentPoly& p);

  bool is_zero() const { return rest_.is_zero(); }
  bool is_one() const { return factors_.empty() && rest_.is_one(); }

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  const std::vector<Factor>& factors() const { return factors_; }
  const LaurentPoly& rest() const { return rest_; }

  /// Expanded numerator and denominator; the denominator has positive
  /// leading coefficient in lex order on (e_q, e_u, e_v).
  LaurentPoly numerator() const;
  LaurentPoly denominator() const;

  /// Exact value at (q0, u0, v0). Throws DenominatorVanishes at a pole.
  Rational evaluate(const Rational& q0, const Rational& u0, const Rational& v0) const;
  double evaluate(double q0, double u0, double v0) const;

  std::string to_string() const;

 private:
  void cancel_denominators();

  std::vector<Factor> factors_;
  LaurentPoly rest_;
};

inline bool is_zero(const Scalar& s) { return s.is_zero(); }
inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace qsym
