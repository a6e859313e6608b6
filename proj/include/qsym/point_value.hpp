#pragma once

#include <string>

#include "qsym/scalar.hpp"

namespace qsym {

/// Exact rational value of a Scalar at a fixed specialization point.
/// Division by zero raises DenominatorVanishes so random-point runs can
/// resample.
class PointValue {
 public:
  PointValue() = default;
  PointValue(long c) : v_(c) {}  // NOLINT(google-explicit-constructor)
  PointValue(int c) : v_(c) {}   // NOLINT(google-explicit-constructor)
  explicit PointValue(Rational v) : v_(std::move(v)) {}

  const Rational& value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  PointValue operator-() const { return PointValue(Rational(-v_)); }
  friend PointValue operator+(const PointValue& a, const PointValue& b) {
    return PointValue(Rational(a.v_ + b.v_));
  }
  friend PointValue operator-(const PointValue& a, const PointValue& b) {
    return PointValue(Rational(a.v_ - b.v_));
  }
  friend PointValue operator*(const PointValue& a, const PointValue& b) {
    return PointValue(Rational(a.v_ * b.v_));
  }
  friend PointValue operator/(const PointValue& a, const PointValue& b) {
    if (b.v_ == 0) throw DenominatorVanishes();
    return PointValue(Rational(a.v_ / b.v_));
  }
  PointValue& operator+=(const PointValue& o) { return *this = *this + o; }
  PointValue& operator-=(const PointValue& o) { return *this = *this - o; }
  PointValue& operator*=(const PointValue& o) { return *this = *this * o; }
  PointValue& operator/=(const PointValue& o) { return *this = *this / o; }
  friend bool operator==(const PointValue& a, const PointValue& b) { return a.v_ == b.v_; }
  friend bool operator!=(const PointValue& a, const PointValue& b) { return a.v_ != b.v_; }

  std::string to_string() const { return v_.get_str(); }

 private:
  Rational v_ = 0;
};

inline bool is_zero(const PointValue& x) { return x.is_zero(); }
inline bool is_zero(double x) { return x == 0.0; }

}  // namespace qsym
