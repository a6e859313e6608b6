#include "qsym/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qsym {

namespace {

using Factor = Scalar::Factor;

bool less(const Factor& a, const Factor& b) { return factor_less(*a.poly, *b.poly); }
bool same(const Factor& a, const Factor& b) {
  return a.poly == b.poly || *a.poly == *b.poly;
}

/// Merge two sorted factor lists, adding exponents (scaled by sign_b).
std::vector<Factor> merge(const std::vector<Factor>& a, const std::vector<Factor>& b, int sign_b) {
  std::vector<Factor> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && less(*i, *j))) {
      out.push_back(*i++);
    } else if (i == a.end() || less(*j, *i)) {
      out.push_back({j->poly, sign_b * j->exp});
      ++j;
    } else {
      const int e = i->exp + sign_b * j->exp;
      if (e != 0) out.push_back({i->poly, e});
      ++i;
      ++j;
    }
  }
  return out;
}

LaurentPoly phi_of_monomial(int d, LaurentPoly::Key rho) {
  const auto& coeffs = cyclotomic(d);
  std::vector<LaurentPoly::Term> terms;
  LaurentPoly::Key power = mono::kUnit;
  for (long c : coeffs) {
    if (c != 0) terms.emplace_back(power, Rational(c));
    power = mono::mul(power, rho);
  }
  return LaurentPoly::from_terms(std::move(terms));
}

/// p = unit * prod factors. Factors come back sorted with exponent +1 each
/// (repeated factors merged).
std::pair<LaurentPoly, std::vector<Factor>> factorize(const LaurentPoly& p) {
  auto [unit, prim] = split_unit(p);
  std::vector<Factor> out;
  if (prim.is_one()) return {unit, out};

  std::vector<LaurentPoly> pieces;
  const auto& t = prim.terms();
  if (t.size() == 2 && abs(t[0].second) == abs(t[1].second)) {
    // prim = c_hi m_hi + c_lo m_lo = c_hi m_lo (R + s), R = m_hi / m_lo
    const auto& [k_lo, c_lo] = t[0];
    const auto& [k_hi, c_hi] = t[1];
    const int s = (c_lo == c_hi) ? 1 : -1;
    unit = unit * LaurentPoly::monomial(mono::unpack(k_lo), c_hi);
    const Monomial r = mono::unpack(mono::div(k_hi, k_lo));
    const int g = std::gcd(std::gcd(std::abs(r.q), std::abs(r.u)), std::abs(r.v));
    const auto rho = mono::pack({r.q / g, r.u / g, r.v / g});
    // R - 1 = prod_{d | g} Phi_d(rho);  R + 1 = prod_{d | 2g, d !| g} Phi_d(rho)
    const int top = s < 0 ? g : 2 * g;
    for (int d = 1; d <= top; ++d) {
      if (top % d != 0) continue;
      if (s > 0 && g % d == 0) continue;
      pieces.push_back(phi_of_monomial(d, rho));
    }
  } else {
    pieces.push_back(std::move(prim));
  }
  for (auto& piece : pieces) {
    auto [u2, p2] = split_unit(piece);
    unit = unit * u2;
    if (p2.is_one()) continue;
    out.push_back({std::make_shared<const LaurentPoly>(std::move(p2)), 1});
  }
  std::sort(out.begin(), out.end(), less);
  std::vector<Factor> merged;
  for (auto& f : out) {
    if (!merged.empty() && same(merged.back(), f)) {
      merged.back().exp += f.exp;
    } else {
      merged.push_back(std::move(f));
    }
  }
  return {unit, merged};
}

LaurentPoly unit_inverse(const LaurentPoly& unit) {
  const auto& [k, c] = unit.leading();
  return LaurentPoly::monomial(mono::unpack(mono::div(mono::kUnit, k)), 1 / c);
}

}  // namespace

Scalar Scalar::monomial(int eq, int eu, int ev, Rational c) {
  return Scalar(LaurentPoly::monomial({eq, eu, ev}, std::move(c)));
}

Scalar Scalar::factored(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  auto [unit, facs] = factorize(p);
  Scalar s;
  s.rest_ = std::move(unit);
  s.factors_ = std::move(facs);
  return s;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.rest_ = -r.rest_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar: division by zero");
  Scalar r;
  r.factors_ = factors_;
  for (auto& f : r.factors_) f.exp = -f.exp;
  auto [unit, facs] = factorize(rest_);
  for (auto& f : facs) f.exp = -f.exp;
  r.factors_ = merge(r.factors_, facs, 1);
  r.rest_ = unit_inverse(unit);
  return r;
}

void Scalar::cancel_denominators() {
  if (rest_.is_monomial()) return;
  for (auto& f : factors_) {
    while (f.exp < 0) {
      auto q = divide_exact(rest_, *f.poly);
      if (!q) break;
      rest_ = std::move(*q);
      ++f.exp;
    }
    if (rest_.is_monomial()) break;
  }
  std::erase_if(factors_, [](const Factor& f) { return f.exp == 0; });
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Scalar r;
  r.factors_ = merge(a.factors_, b.factors_, 1);
  r.rest_ = a.rest_ * b.rest_;
  return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  Scalar r = a * b.inverse();
  if (!b.rest_.is_monomial()) r.cancel_denominators();
  return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Scalar r;
  LaurentPoly pa = a.rest_;
  LaurentPoly pb = b.rest_;
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  // common part gets the minimum exponent; the excess is expanded into the rests
  while (i != a.factors_.end() || j != b.factors_.end()) {
    Scalar::FactorPtr f;
    int ea = 0;
    int eb = 0;
    if (j == b.factors_.end() || (i != a.factors_.end() && less(*i, *j))) {
      f = i->poly;
      ea = (i++)->exp;
    } else if (i == a.factors_.end() || less(*j, *i)) {
      f = j->poly;
      eb = (j++)->exp;
    } else {
      f = i->poly;
      ea = (i++)->exp;
      eb = (j++)->exp;
    }
    const int g = std::min(ea, eb);
    if (g != 0) r.factors_.push_back({f, g});
    if (ea > g) pa *= f->pow(static_cast<unsigned>(ea - g));
    if (eb > g) pb *= f->pow(static_cast<unsigned>(eb - g));
  }
  r.rest_ = pa + pb;
  if (r.rest_.is_zero()) return {};
  r.cancel_denominators();
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.rest_ == b.rest_ && a.factors_.size() == b.factors_.size() &&
      std::equal(a.factors_.begin(), a.factors_.end(), b.factors_.begin(),
                 [](const Factor& x, const Factor& y) { return x.exp == y.exp && same(x, y); })) {
    return true;
  }
  return (a - b).is_zero();
}

LaurentPoly Scalar::numerator() const {
  LaurentPoly n = rest_;
  for (const auto& f : factors_) {
    if (f.exp > 0) n *= f.poly->pow(static_cast<unsigned>(f.exp));
  }
  return n;
}

LaurentPoly Scalar::denominator() const {
  LaurentPoly d(1L);
  for (const auto& f : factors_) {
    if (f.exp < 0) d *= f.poly->pow(static_cast<unsigned>(-f.exp));
  }
  return d;
}

Rational Scalar::evaluate(const Rational& q0, const Rational& u0, const Rational& v0) const {
  if (q0 == 0 || u0 == 0 || v0 == 0) throw DenominatorVanishes();
  Rational num = rest_.evaluate(q0, u0, v0);
  Rational den = 1;
  for (const auto& f : factors_) {
    const Rational x = f.poly->evaluate(q0, u0, v0);
    if (f.exp < 0 && x == 0) throw DenominatorVanishes();
    for (int e = 0; e < std::abs(f.exp); ++e) (f.exp > 0 ? num : den) *= x;
  }
  return num / den;
}

double Scalar::evaluate(double q0, double u0, double v0) const {
  double r = rest_.evaluate(q0, u0, v0);
  for (const auto& f : factors_) r *= std::pow(f.poly->evaluate(q0, u0, v0), f.exp);
  return r;
}

std::string Scalar::to_string() const {
  const LaurentPoly n = numerator();
  const LaurentPoly d = denominator();
  if (d.is_one()) return n.to_string();
  std::string ns = n.to_string();
  if (n.size() > 1) ns = "(" + ns + ")";
  return ns + "/(" + d.to_string() + ")";
}

}  // namespace qsym
