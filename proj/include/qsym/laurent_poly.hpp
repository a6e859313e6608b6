#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qsym {

using Rational = mpq_class;

/// Exponent triple of q^e_q u^e_u v^e_v. Exponents may be negative.
struct Monomial {
  int q = 0;
  int u = 0;
  int v = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Monomials are packed into a 64-bit key (21 bits per exponent, offset
/// encoded) so that unsigned comparison of keys is lexicographic order on
/// (e_q, e_u, e_v) and multiplication is key addition.
namespace mono {

constexpr int kBits = 21;
constexpr std::int64_t kOffset = std::int64_t{1} << (kBits - 1);
constexpr std::uint64_t kMask = (std::uint64_t{1} << kBits) - 1;
constexpr std::uint64_t kUnit = (static_cast<std::uint64_t>(kOffset) << (2 * kBits)) |
                                (static_cast<std::uint64_t>(kOffset) << kBits) |
                                static_cast<std::uint64_t>(kOffset);

inline std::uint64_t pack(const Monomial& m) {
  return (static_cast<std::uint64_t>(m.q + kOffset) << (2 * kBits)) |
         (static_cast<std::uint64_t>(m.u + kOffset) << kBits) |
         static_cast<std::uint64_t>(m.v + kOffset);
}

inline Monomial unpack(std::uint64_t k) {
  return {static_cast<int>(static_cast<std::int64_t>((k >> (2 * kBits)) & kMask) - kOffset),
          static_cast<int>(static_cast<std::int64_t>((k >> kBits) & kMask) - kOffset),
          static_cast<int>(static_cast<std::int64_t>(k & kMask) - kOffset)};
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) { return a + b - kUnit; }
inline std::uint64_t div(std::uint64_t a, std::uint64_t b) { return a - b + kUnit; }

}  // namespace mono

/// Sparse Laurent polynomial in (q, u, v) with rational coefficients.
/// Terms are kept sorted by monomial key with no zero coefficients, so
/// structural equality is mathematical equality.
class LaurentPoly {
 public:
  using Key = std::uint64_t;
  using Term = std::pair<Key, Rational>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(Rational c);
  static LaurentPoly monomial(const Monomial& m, Rational c = 1);
  /// Takes unsorted terms, combines duplicates and drops zeros.
  static LaurentPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const;
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  /// Lex-largest term; requires non-zero.
  const Term& leading() const { return terms_.back(); }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  LaurentPoly scaled(const Rational& c) const;
  LaurentPoly shifted(Key m) const;  // multiply by a monomial
  LaurentPoly pow(unsigned e) const;

  /// Component-wise minimum exponent (the monomial content).
  Monomial min_exponents() const;
  Monomial max_exponents() const;

  /// Exact quotient a/b if b divides a in the Laurent ring, otherwise nullopt.
  friend std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

  /// Total order used to sort factor lists (size first, then terms).
  friend bool factor_less(const LaurentPoly& a, const LaurentPoly& b);

  Rational evaluate(const Rational& q0, const Rational& u0, const Rational& v0) const;
  double evaluate(double q0, double u0, double v0) const;

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// Split p = unit * primitive where unit is c*monomial and primitive is a
/// polynomial (no negative exponents, monomial content 1) with coprime
/// integer coefficients and positive leading coefficient.
struct UnitSplit {
  LaurentPoly unit;       // single term
  LaurentPoly primitive;  // 1 when p itself is a unit
};
UnitSplit split_unit(const LaurentPoly& p);

/// Cyclotomic polynomial Phi_d as integer coefficients, index = degree.
const std::vector<long>& cyclotomic(int d);

}  // namespace qsym
