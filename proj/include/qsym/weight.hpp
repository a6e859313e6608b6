#pragma once

#include <string>

namespace qsym {

/// Affine weight a*lambda + b*lambda' + c, the argument of every q-bracket.
struct WeightExpr {
  int a = 0;
  int b = 0;
  int c = 0;

  constexpr WeightExpr() = default;
  constexpr WeightExpr(int a_, int b_, int c_) : a(a_), b(b_), c(c_) {}
  static constexpr WeightExpr integer(int c) { return {0, 0, c}; }
  static constexpr WeightExpr lambda() { return {1, 0, 0}; }
  static constexpr WeightExpr lambda_prime() { return {0, 1, 0}; }

  constexpr WeightExpr operator-() const { return {-a, -b, -c}; }
  friend constexpr WeightExpr operator+(WeightExpr x, WeightExpr y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c};
  }
  friend constexpr WeightExpr operator-(WeightExpr x, WeightExpr y) { return x + (-y); }
  friend constexpr WeightExpr operator+(WeightExpr x, int k) { return {x.a, x.b, x.c + k}; }
  friend constexpr WeightExpr operator-(WeightExpr x, int k) { return {x.a, x.b, x.c - k}; }
  friend constexpr WeightExpr operator*(int k, WeightExpr x) { return {k * x.a, k * x.b, k * x.c}; }
  friend constexpr bool operator==(WeightExpr, WeightExpr) = default;

  std::string to_string() const;
};

// Parameters of the little q-Jacobi / q-Hahn layer: alpha + 1 = lambda, beta + 1 = lambda'.
inline constexpr WeightExpr kAlpha{1, 0, -1};
inline constexpr WeightExpr kBeta{0, 1, -1};

}  // namespace qsym
