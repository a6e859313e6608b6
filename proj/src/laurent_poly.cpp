#include "qsym/laurent_poly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qsym {

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace_back(mono::kUnit, Rational(c));
}

LaurentPoly::LaurentPoly(Rational c) {
  if (c != 0) terms_.emplace_back(mono::kUnit, std::move(c));
}

LaurentPoly LaurentPoly::monomial(const Monomial& m, Rational c) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace_back(mono::pack(m), std::move(c));
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPoly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (t.second != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == mono::kUnit && terms_[0].second == 1;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {

template <bool Subtract>
std::vector<LaurentPoly::Term> merge_terms(const std::vector<LaurentPoly::Term>& a,
                                           const std::vector<LaurentPoly::Term>& b) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, Subtract ? Rational(-j->second) : j->second);
      ++j;
    } else {
      Rational c = Subtract ? Rational(i->second - j->second) : Rational(i->second + j->second);
      if (c != 0) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = merge_terms<false>(terms_, o.terms_);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms<true>(terms_, o.terms_);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return b.shifted(a.terms_[0].first).scaled(a.terms_[0].second);
  if (b.size() == 1) return a.shifted(b.terms_[0].first).scaled(b.terms_[0].second);
  std::vector<LaurentPoly::Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) prod.emplace_back(mono::mul(ka, kb), ca * cb);
  }
  return LaurentPoly::from_terms(std::move(prod));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  if (c == 0) return {};
  if (c == 1) return *this;
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

LaurentPoly LaurentPoly::shifted(Key m) const {
  if (m == mono::kUnit) return *this;
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.first = mono::mul(t.first, m);
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result(1L);
  LaurentPoly base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

Monomial LaurentPoly::min_exponents() const {
  if (terms_.empty()) return {};
  Monomial m = mono::unpack(terms_.front().first);
  for (const auto& t : terms_) {
    const Monomial e = mono::unpack(t.first);
    m.q = std::min(m.q, e.q);
    m.u = std::min(m.u, e.u);
    m.v = std::min(m.v, e.v);
  }
  return m;
}

Monomial LaurentPoly::max_exponents() const {
  if (terms_.empty()) return {};
  Monomial m = mono::unpack(terms_.front().first);
  for (const auto& t : terms_) {
    const Monomial e = mono::unpack(t.first);
    m.q = std::max(m.q, e.q);
    m.u = std::max(m.u, e.u);
    m.v = std::max(m.v, e.v);
  }
  return m;
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
  if (a.is_zero()) return LaurentPoly{};
  if (b.is_monomial()) {
    const auto& [kb, cb] = b.terms_[0];
    return a.shifted(mono::div(mono::kUnit, kb)).scaled(1 / cb);
  }
  // Reduce to ordinary polynomials: min exponents are additive under
  // multiplication, so b | a in the Laurent ring iff b' | a' as polynomials.
  const auto ma = mono::pack(a.min_exponents());
  const auto mb = mono::pack(b.min_exponents());
  const auto shift_a = mono::div(mono::kUnit, ma);
  const auto shift_b = mono::div(mono::kUnit, mb);
  const LaurentPoly bp = b.shifted(shift_b);
  const auto [lk, lc] = bp.leading();
  const Monomial lead = mono::unpack(lk);

  std::map<LaurentPoly::Key, Rational> rem;
  for (const auto& [k, c] : a.terms_) rem.emplace(mono::mul(k, shift_a), c);

  std::vector<LaurentPoly::Term> quot;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    const Monomial e = mono::unpack(top->first);
    if (e.q < lead.q || e.u < lead.u || e.v < lead.v) return std::nullopt;
    const auto qk = mono::div(top->first, lk);
    const Rational qc = top->second / lc;
    for (const auto& [k, c] : bp.terms_) {
      const auto key = mono::mul(k, qk);
      auto [it, inserted] = rem.try_emplace(key, 0);
      it->second -= qc * c;
      if (it->second == 0) rem.erase(it);
    }
    quot.emplace_back(qk, qc);
  }
  // quotient of a'/b' times ma/mb
  return LaurentPoly::from_terms(std::move(quot)).shifted(mono::div(ma, mb));
}

bool factor_less(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& ta = a.terms_[i];
    const auto& tb = b.terms_[i];
    if (ta.first != tb.first) return ta.first < tb.first;
    if (ta.second != tb.second) return ta.second < tb.second;
  }
  return false;
}

namespace {

Rational rational_pow(const Rational& x, int e) {
  if (e == 0) return 1;
  if (x == 0) {
    if (e < 0) throw std::domain_error("negative power of zero");
    return 0;
  }
  mpz_class n, d;
  const unsigned ae = static_cast<unsigned>(e < 0 ? -e : e);
  mpz_pow_ui(n.get_mpz_t(), x.get_num_mpz_t(), ae);
  mpz_pow_ui(d.get_mpz_t(), x.get_den_mpz_t(), ae);
  Rational r = e > 0 ? Rational(n, d) : Rational(d, n);
  r.canonicalize();
  return r;
}

}  // namespace

Rational LaurentPoly::evaluate(const Rational& q0, const Rational& u0, const Rational& v0) const {
  std::map<int, Rational> qp, up, vp;
  auto cached = [](std::map<int, Rational>& cache, const Rational& x, int e) -> const Rational& {
    auto it = cache.find(e);
    if (it == cache.end()) it = cache.emplace(e, rational_pow(x, e)).first;
    return it->second;
  };
  Rational sum = 0;
  for (const auto& [k, c] : terms_) {
    const Monomial m = mono::unpack(k);
    sum += c * cached(qp, q0, m.q) * cached(up, u0, m.u) * cached(vp, v0, m.v);
  }
  return sum;
}

double LaurentPoly::evaluate(double q0, double u0, double v0) const {
  double sum = 0.0;
  for (const auto& [k, c] : terms_) {
    const Monomial m = mono::unpack(k);
    sum += c.get_d() * std::pow(q0, m.q) * std::pow(u0, m.u) * std::pow(v0, m.v);
  }
  return sum;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->second;
    const Monomial m = mono::unpack(it->first);
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const bool unit_mono = m == Monomial{};
    bool need_star = false;
    if (c != 1 || unit_mono) {
      os << c.get_str();
      need_star = true;
    }
    auto var = [&](const char* name, int e) {
      if (e == 0) return;
      if (need_star) os << "*";
      os << name;
      if (e != 1) os << "^" << e;
      need_star = true;
    };
    var("q", m.q);
    var("u", m.u);
    var("v", m.v);
  }
  return os.str();
}

UnitSplit split_unit(const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("split_unit: zero polynomial");
  const Monomial m = p.min_exponents();
  mpz_class g = 0;
  mpz_class l = 1;
  for (const auto& [k, c] : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational content(g, l);
  content.canonicalize();
  if (p.leading().second < 0) content = -content;
  const Monomial inv{-m.q, -m.u, -m.v};
  LaurentPoly prim = p.shifted(mono::pack(inv)).scaled(1 / content);
  return {LaurentPoly::monomial(m, content), std::move(prim)};
}

namespace {

std::mutex cyclo_mu;
std::map<int, std::vector<long>> cyclo_cache;

// Caller holds cyclo_mu.
const std::vector<long>& cyclotomic_locked(int d) {
  if (auto it = cyclo_cache.find(d); it != cyclo_cache.end()) return it->second;
  // Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e
  std::vector<long> num(static_cast<std::size_t>(d) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(d)] = 1;
  for (int e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    const std::vector<long> den = cyclotomic_locked(e);
    std::vector<long> quot(num.size() - den.size() + 1, 0);
    for (std::size_t i = quot.size(); i-- > 0;) {
      const long c = num[i + den.size() - 1];  // den is monic
      quot[i] = c;
      for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    num = std::move(quot);
  }
  return cyclo_cache.emplace(d, std::move(num)).first->second;
}

}  // namespace

const std::vector<long>& cyclotomic(int d) {
  if (d < 1) throw std::domain_error("cyclotomic: index must be positive");
  std::lock_guard lock(cyclo_mu);
  return cyclotomic_locked(d);
}

}  // namespace qsym
