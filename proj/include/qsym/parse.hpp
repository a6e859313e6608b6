#pragma once

#include <stdexcept>
#include <string>

#include "qsym/poly.hpp"

namespace qsym {

/// Malformed expression or a variable not allowed in the target space.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Expressions over +, -, *, /, integer powers, parentheses, integer
/// constants and the symbols q, u, v. Division and negative powers are
/// allowed only for variable-free subexpressions.

/// Quantum-plane input in x, y; products are normal-ordered with yx = q^2 xy.
QPlanePoly<Scalar> parse_plane(const std::string& text);
/// Input in t, X; raises DomainError if a term t^i X^j with j > i remains.
TXPoly<Scalar> parse_tx(const std::string& text);
/// One-variable input; `var` names the accepted variable and z is always accepted.
OnePoly<Scalar> parse_one(const std::string& text, char var = 'z');
/// Variable-free input.
Scalar parse_scalar(const std::string& text);

}  // namespace qsym
