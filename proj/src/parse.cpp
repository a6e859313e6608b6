#include "qsym/parse.hpp"

#include <cctype>
#include <map>
#include <utility>

namespace qsym {
namespace {

// Intermediate value: finitely many (i, j) -> Scalar with no constraint on
// the key, i.e. polynomials in two symbols before the target rules apply.
using Key = std::pair<int, int>;
using Value = std::map<Key, Scalar>;

struct Target {
  char first = 0;   // symbol for the first index, 0 if unused
  char second = 0;  // symbol for the second index, 0 if unused
  char alias = 0;   // extra spelling accepted for the first symbol
  bool twisted = false;  // quantum-plane reordering of products
};

void add_into(Value& v, const Key& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = v.try_emplace(k, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) v.erase(it);
  }
}

bool is_constant(const Value& v) { return v.empty() || (v.size() == 1 && v.begin()->first == Key{0, 0}); }

Scalar constant_of(const Value& v) { return v.empty() ? Scalar(0) : v.begin()->second; }

class Parser {
 public:
  Parser(const std::string& text, Target target) : s_(text), t_(target) {}

  Value parse() {
    Value v = expr();
    skip_ws();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    throw ParseError("parse error at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value mul(const Value& a, const Value& b) const {
    Value r;
    for (const auto& [ka, ca] : a)
      for (const auto& [kb, cb] : b) {
        Scalar c = ca * cb;
        if (t_.twisted && ka.second != 0 && kb.first != 0) c = Scalar::monomial(2 * ka.second * kb.first, 0, 0) * c;
        add_into(r, {ka.first + kb.first, ka.second + kb.second}, c);
      }
    return r;
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (accept('+')) {
        for (const auto& [k, c] : term()) add_into(v, k, c);
      } else if (accept('-')) {
        for (const auto& [k, c] : term()) add_into(v, k, -c);
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = unary();
    for (;;) {
      if (accept('*')) {
        v = mul(v, unary());
      } else if (accept('/')) {
        const Value d = unary();
        if (!is_constant(d)) error("division by an expression containing a variable");
        const Scalar c = constant_of(d);
        if (c.is_zero()) error("division by zero");
        Value r;
        for (const auto& [k, a] : v) add_into(r, k, a / c);
        v = std::move(r);
      } else {
        return v;
      }
    }
  }

  Value unary() {
    if (accept('-')) {
      Value r;
      for (const auto& [k, c] : unary()) add_into(r, k, -c);
      return r;
    }
    if (accept('+')) return unary();
    return power();
  }

  int exponent() {
    bool paren = accept('(');
    bool neg = false;
    if (accept('-')) {
      neg = true;
    } else {
      accept('+');
    }
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) error("expected an integer exponent");
    long e = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      e = e * 10 + (s_[pos_++] - '0');
      if (e > 10000) error("exponent too large");
    }
    if (paren && !accept(')')) error("expected ')'");
    return static_cast<int>(neg ? -e : e);
  }

  Value power() {
    Value base = primary();
    if (!accept('^')) return base;
    const int e = exponent();
    if (e < 0) {
      if (!is_constant(base)) error("negative power of an expression containing a variable");
      const Scalar c = constant_of(base);
      if (c.is_zero()) error("negative power of zero");
      return {{Key{0, 0}, ipow(c.inverse(), -e)}};
    }
    Value r{{Key{0, 0}, Scalar(1)}};
    for (int i = 0; i < e; ++i) r = mul(r, base);
    return r;
  }

  Value primary() {
    skip_ws();
    if (pos_ >= s_.size()) error("unexpected end of input");
    const char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      Value v = expr();
      if (!accept(')')) error("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string digits;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
      return {{Key{0, 0}, Scalar(Rational(mpz_class(digits)))}};
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      ++pos_;
      if (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_])))
        error("unknown identifier starting with '" + std::string(1, ch) + "'");
      switch (ch) {
        case 'q':
          return {{Key{0, 0}, Scalar::monomial(1, 0, 0)}};
        case 'u':
          return {{Key{0, 0}, Scalar::monomial(0, 1, 0)}};
        case 'v':
          return {{Key{0, 0}, Scalar::monomial(0, 0, 1)}};
        default:
          break;
      }
      if (t_.first != 0 && (ch == t_.first || (t_.alias != 0 && ch == t_.alias))) return {{Key{1, 0}, Scalar(1)}};
      if (t_.second != 0 && ch == t_.second) return {{Key{0, 1}, Scalar(1)}};
      --pos_;
      error("symbol '" + std::string(1, ch) + "' is not allowed here");
    }
    error("unexpected '" + std::string(1, ch) + "'");
  }

  const std::string& s_;
  Target t_;
  std::size_t pos_ = 0;
};

}  // namespace

QPlanePoly<Scalar> parse_plane(const std::string& text) {
  QPlanePoly<Scalar> r;
  for (const auto& [k, c] : Parser(text, {'x', 'y', 0, true}).parse()) r.add_term(k.first, k.second, c);
  return r;
}

TXPoly<Scalar> parse_tx(const std::string& text) {
  TXPoly<Scalar> r;
  for (const auto& [k, c] : Parser(text, {'t', 'X', 0, false}).parse()) r.add_term(k.first, k.second, c);
  return r;
}

OnePoly<Scalar> parse_one(const std::string& text, char var) {
  OnePoly<Scalar> r;
  for (const auto& [k, c] : Parser(text, {'z', 0, var == 'z' ? '\0' : var, false}).parse()) r.add_term(k.first, c);
  return r;
}

Scalar parse_scalar(const std::string& text) {
  const Value v = Parser(text, {}).parse();
  return constant_of(v);
}

}  // namespace qsym
