#pragma once

#include <map>
#include <sstream>
#include <string>
#include <stdexcept>
#include <utility>

#include "qsym/coeff_field.hpp"

namespace qsym {

/// Raised when a (t, X) polynomial leaves C[t, tX] (some term t^i X^j with j > i).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct ZVar {
  static constexpr const char* name = "z";
};
struct XVar {
  static constexpr const char* name = "X";
};

/// Sparse polynomial in one variable, degree -> coefficient, no zeros stored.
template <class S, class Var>
class Poly1 {
 public:
  using coeff_type = S;
  using Map = std::map<int, S>;

  Poly1() = default;
  explicit Poly1(const S& c) { add_term(0, c); }
  static Poly1 monomial(int n, const S& c = S(1)) {
    Poly1 p;
    p.add_term(n, c);
    return p;
  }

  void add_term(int n, const S& c) {
    if (n < 0) throw std::invalid_argument("Poly1: negative degree");
    if (qsym::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(n, c);
    if (!inserted) {
      it->second = it->second + c;
      if (qsym::is_zero(it->second)) terms_.erase(it);
    }
  }

  S coeff(int n) const {
    auto it = terms_.find(n);
    return it == terms_.end() ? S(0) : it->second;
  }
  bool is_zero() const { return terms_.empty(); }
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  const Map& terms() const { return terms_; }

  Poly1& operator+=(const Poly1& o) {
    for (const auto& [n, c] : o.terms_) add_term(n, c);
    return *this;
  }
  Poly1& operator-=(const Poly1& o) {
    for (const auto& [n, c] : o.terms_) add_term(n, -c);
    return *this;
  }
  friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
  friend Poly1 operator-(Poly1 a, const Poly1& b) { return a -= b; }
  friend Poly1 operator*(const S& c, const Poly1& p) {
    Poly1 r;
    if (qsym::is_zero(c)) return r;
    for (const auto& [n, a] : p.terms_) r.add_term(n, c * a);
    return r;
  }
  friend Poly1 operator*(const Poly1& a, const Poly1& b) {
    Poly1 r;
    for (const auto& [n, x] : a.terms_)
      for (const auto& [m, y] : b.terms_) r.add_term(n + m, x * y);
    return r;
  }
  friend bool operator==(const Poly1& a, const Poly1& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto i = a.terms_.begin();
    for (auto j = b.terms_.begin(); j != b.terms_.end(); ++i, ++j) {
      if (i->first != j->first || !(i->second == j->second)) return false;
    }
    return true;
  }
  friend bool operator!=(const Poly1& a, const Poly1& b) { return !(a == b); }

 private:
  Map terms_;
};

template <class S>
using OnePoly = Poly1<S, ZVar>;
template <class S>
using XPoly = Poly1<S, XVar>;

struct QPlaneTag {
  static constexpr const char* first = "x";
  static constexpr const char* second = "y";
  static constexpr bool restrict_tx = false;
};
struct TXTag {
  static constexpr const char* first = "t";
  static constexpr const char* second = "X";
  static constexpr bool restrict_tx = true;
};

/// Sparse polynomial on a two-index basis. For the quantum plane the key
/// (k, l) means the normal-ordered monomial x^k y^l; for TXTag it means
/// t^i X^j and every stored key satisfies j <= i (membership in C[t, tX]).
template <class S, class Tag>
class Poly2 {
 public:
  using coeff_type = S;
  using Key = std::pair<int, int>;
  using Map = std::map<Key, S>;

  Poly2() = default;
  explicit Poly2(const S& c) { add_term(0, 0, c); }
  static Poly2 monomial(int i, int j, const S& c = S(1)) {
    Poly2 p;
    p.add_term(i, j, c);
    return p;
  }

  void add_term(int i, int j, const S& c) {
    if (i < 0 || j < 0) throw std::invalid_argument("Poly2: negative degree");
    if (Tag::restrict_tx && j > i) throw DomainError("term outside C[t,tX]");
    if (qsym::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(Key{i, j}, c);
    if (!inserted) {
      it->second = it->second + c;
      if (qsym::is_zero(it->second)) terms_.erase(it);
    }
  }

  S coeff(int i, int j) const {
    auto it = terms_.find(Key{i, j});
    return it == terms_.end() ? S(0) : it->second;
  }
  bool is_zero() const { return terms_.empty(); }
  const Map& terms() const { return terms_; }
  /// Largest total degree i + j (for TX the t-degree is reported instead).
  int degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, Tag::restrict_tx ? k.first : k.first + k.second);
    return d;
  }

  Poly2& operator+=(const Poly2& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
  }
  Poly2& operator-=(const Poly2& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
  }
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const S& c, const Poly2& p) {
    Poly2 r;
    if (qsym::is_zero(c)) return r;
    for (const auto& [k, a] : p.terms_) r.add_term(k.first, k.second, c * a);
    return r;
  }
  friend bool operator==(const Poly2& a, const Poly2& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto i = a.terms_.begin();
    for (auto j = b.terms_.begin(); j != b.terms_.end(); ++i, ++j) {
      if (i->first != j->first || !(i->second == j->second)) return false;
    }
    return true;
  }
  friend bool operator!=(const Poly2& a, const Poly2& b) { return !(a == b); }

 private:
  Map terms_;
};

template <class S>
using QPlanePoly = Poly2<S, QPlaneTag>;
template <class S>
using TXPoly = Poly2<S, TXTag>;

inline std::string coeff_string(const Scalar& c) { return c.to_string(); }
inline std::string coeff_string(const PointValue& c) { return c.to_string(); }
inline std::string coeff_string(double c) {
  std::ostringstream os;
  os.precision(17);
  os << c;
  return os.str();
}

namespace detail {
inline void append_term(std::ostringstream& os, bool& first, const std::string& coeff,
                        const std::string& monomial) {
  if (!first) os << " + ";
  first = false;
  if (monomial.empty()) {
    os << "(" << coeff << ")";
  } else if (coeff == "1") {
    os << monomial;
  } else {
    os << "(" << coeff << ")*" << monomial;
  }
}
inline std::string power_string(const char* var, int e) {
  if (e == 0) return "";
  std::string s = var;
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}
}  // namespace detail

template <class S, class Var>
std::string to_string(const Poly1<S, Var>& p) {
  if (p.is_zero()) return "0";
  if (p.terms().size() == 1 && p.terms().begin()->first == 0) return coeff_string(p.terms().begin()->second);
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, c] : p.terms())
    detail::append_term(os, first, coeff_string(c), detail::power_string(Var::name, n));
  return os.str();
}

template <class S, class Tag>
std::string to_string(const Poly2<S, Tag>& p) {
  if (p.is_zero()) return "0";
  if (p.terms().size() == 1 && p.terms().begin()->first == std::pair<int, int>{0, 0})
    return coeff_string(p.terms().begin()->second);
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : p.terms()) {
    std::string m = detail::power_string(Tag::first, k.first);
    const std::string m2 = detail::power_string(Tag::second, k.second);
    if (!m.empty() && !m2.empty()) m += "*";
    detail::append_term(os, first, coeff_string(c), m + m2);
  }
  return os.str();
}

/// Coefficient-wise conversion between coefficient fields, e.g. symbolic
/// Scalar -> PointValue by evaluation.
template <class T, class S, class Var, class F>
Poly1<T, Var> map_coeffs(const Poly1<S, Var>& p, F&& f) {
  Poly1<T, Var> r;
  for (const auto& [n, c] : p.terms()) r.add_term(n, f(c));
  return r;
}

template <class T, class S, class Tag, class F>
Poly2<T, Tag> map_coeffs(const Poly2<S, Tag>& p, F&& f) {
  Poly2<T, Tag> r;
  for (const auto& [k, c] : p.terms()) r.add_term(k.first, k.second, f(c));
  return r;
}

}  // namespace qsym
