#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qsym/poly.hpp"

namespace qsym {

/// Outcome of one identity check. The counterexample holds the first
/// mismatch found, with both sides printed in full.
struct Report {
  std::string identity;
  std::map<std::string, std::string> params;
  bool ok = true;
  std::string counterexample;
};

inline std::string describe(const Scalar& c) { return c.to_string(); }
inline std::string describe(const PointValue& c) { return c.to_string(); }
inline std::string describe(double c) { return coeff_string(c); }
inline std::string describe(int c) { return std::to_string(c); }
template <class S, class Var>
std::string describe(const Poly1<S, Var>& p) {
  return to_string(p);
}
template <class S, class Tag>
std::string describe(const Poly2<S, Tag>& p) {
  return to_string(p);
}
template <class S>
std::string describe(const std::vector<S>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + describe(v[i]);
  return s + "]";
}

// Single-coefficient corruption used for negative controls.
template <class T>
T poisoned(const T& x) {
  return x + T(1);
}
template <class S, class Var>
Poly1<S, Var> poisoned(const Poly1<S, Var>& p) {
  Poly1<S, Var> r = p;
  r.add_term(p.is_zero() ? 0 : p.terms().begin()->first, S(1));
  return r;
}
template <class S, class Tag>
Poly2<S, Tag> poisoned(const Poly2<S, Tag>& p) {
  Poly2<S, Tag> r = p;
  if (p.is_zero()) {
    r.add_term(0, 0, S(1));
  } else {
    const auto& k = p.terms().begin()->first;
    r.add_term(k.first, k.second, S(1));
  }
  return r;
}
template <class S>
std::vector<S> poisoned(const std::vector<S>& v) {
  std::vector<S> r = v;
  if (r.empty()) return {S(1)};
  r[0] = r[0] + S(1);
  return r;
}

/// Collects equalities for one named identity. With poisoning on, the left
/// side of the first comparison is corrupted in one coefficient, so a
/// working checker must report failure.
class Checker {
 public:
  explicit Checker(std::string identity, bool poison = false)
      : poison_(poison) {
    report_.identity = std::move(identity);
  }

  Checker& param(const std::string& key, const std::string& value) {
    report_.params[key] = value;
    return *this;
  }
  Checker& param(const std::string& key, int value) { return param(key, std::to_string(value)); }

  template <class T>
  bool equal(const T& lhs, const T& rhs, const std::string& where) {
    if (poison_) {
      poison_ = false;
      return compare(poisoned(lhs), rhs, where);
    }
    return compare(lhs, rhs, where);
  }

  bool require(bool cond, const std::string& where) {
    if (!cond) fail(where);
    return cond;
  }

  void fail(const std::string& what) {
    if (report_.ok) report_.counterexample = what;
    report_.ok = false;
  }

  bool ok() const { return report_.ok; }
  const Report& report() const { return report_; }

 private:
  template <class T>
  bool compare(const T& lhs, const T& rhs, const std::string& where) {
    if (lhs == rhs) return true;
    if (report_.ok) fail(where + ": lhs = " + describe(lhs) + "; rhs = " + describe(rhs));
    return false;
  }

  bool poison_;
  Report report_;
};

}  // namespace qsym
