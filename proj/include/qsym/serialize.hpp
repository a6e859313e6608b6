#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qsym/check.hpp"
#include "qsym/linalg.hpp"
#include "qsym/qspecial.hpp"

namespace qsym {

using json = nlohmann::json;

/// {"num": [[e_q, e_u, e_v, "p/r"], ...], "den": [...]}.
json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);
json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);

inline json to_json(const PointValue& s) { return s.to_string(); }
inline json to_json(double s) { return s; }

/// [[n, c], ...] for one variable, [[k, l, c], ...] for two.
template <class S, class Var>
json to_json(const Poly1<S, Var>& p) {
  json out = json::array();
  for (const auto& [n, c] : p.terms()) out.push_back({n, to_json(c)});
  return out;
}

template <class S, class Tag>
json to_json(const Poly2<S, Tag>& p) {
  json out = json::array();
  for (const auto& [k, c] : p.terms()) out.push_back({k.first, k.second, to_json(c)});
  return out;
}

template <class S>
json to_json(const GridFunction<S>& g) {
  json values = json::array();
  for (const auto& v : g.values) values.push_back(to_json(v));
  return {{"N", g.N}, {"k", g.k}, {"values", values}};
}

template <class S>
json to_json(const OpMatrix<S>& m) {
  json entries = json::array();
  for (Eigen::Index i = 0; i < m.m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.m.cols(); ++j) row.push_back(to_json(m.m(i, j)));
    entries.push_back(row);
  }
  return {{"rows", m.rows}, {"cols", m.cols}, {"entries", entries}};
}

/// {"identity", "params", "mode", "status", "counterexample"?}.
json report_to_json(const Report& r, const std::string& mode);
/// Returns an empty string when the record matches the report schema,
/// otherwise a description of the first violation.
std::string report_schema_violation(const json& j);

std::string to_latex(const LaurentPoly& p);
std::string to_latex(const Scalar& s);
inline std::string to_latex(const PointValue& s) { return s.to_string(); }

namespace detail {
inline std::string latex_power(const char* var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return std::string(var) + "^{" + std::to_string(e) + "}";
}
inline void latex_term(std::ostringstream& os, bool& first, const std::string& coeff, const std::string& mono) {
  if (!first) os << " + ";
  first = false;
  if (mono.empty()) {
    os << "\\left(" << coeff << "\\right)";
  } else if (coeff == "1") {
    os << mono;
  } else {
    os << "\\left(" << coeff << "\\right) " << mono;
  }
}
}  // namespace detail

template <class S, class Var>
std::string to_latex(const Poly1<S, Var>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, c] : p.terms()) detail::latex_term(os, first, to_latex(c), detail::latex_power(Var::name, n));
  return os.str();
}

template <class S, class Tag>
std::string to_latex(const Poly2<S, Tag>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : p.terms()) {
    std::string m = detail::latex_power(Tag::first, k.first);
    const std::string m2 = detail::latex_power(Tag::second, k.second);
    if (!m.empty() && !m2.empty()) m += " ";
    detail::latex_term(os, first, to_latex(c), m + m2);
  }
  return os.str();
}

template <class S>
std::string to_latex(const GridFunction<S>& g) {
  std::ostringstream os;
  os << "\\begin{array}{c|l}\nl & Q_{" << g.k << "}^{(" << g.N << ")}(q^{-2l}) \\\\\n\\hline\n";
  for (std::size_t l = 0; l < g.values.size(); ++l) os << l << " & " << to_latex(g.values[l]) << " \\\\\n";
  os << "\\end{array}";
  return os.str();
}

template <class S>
std::string to_latex(const OpMatrix<S>& m) {
  std::ostringstream os;
  os << "\\begin{pmatrix}\n";
  for (Eigen::Index i = 0; i < m.m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.m.cols(); ++j) os << (j ? " & " : "") << to_latex(m.m(i, j));
    os << " \\\\\n";
  }
  os << "\\end{pmatrix}";
  return os.str();
}

/// CSV field quoting for values that may contain commas or quotes.
std::string csv_field(const std::string& s);

template <class S, class Var>
std::string to_csv(const Poly1<S, Var>& p) {
  std::string out = std::string(Var::name) + "_degree,coefficient\n";
  for (const auto& [n, c] : p.terms()) out += std::to_string(n) + "," + csv_field(coeff_string(c)) + "\n";
  return out;
}

template <class S, class Tag>
std::string to_csv(const Poly2<S, Tag>& p) {
  std::string out = std::string(Tag::first) + "_degree," + Tag::second + "_degree,coefficient\n";
  for (const auto& [k, c] : p.terms())
    out += std::to_string(k.first) + "," + std::to_string(k.second) + "," + csv_field(coeff_string(c)) + "\n";
  return out;
}

template <class S>
std::string to_csv(const GridFunction<S>& g) {
  std::string out = "N,k,l,value\n";
  for (std::size_t l = 0; l < g.values.size(); ++l)
    out += std::to_string(g.N) + "," + std::to_string(g.k) + "," + std::to_string(l) + "," +
           csv_field(coeff_string(g.values[l])) + "\n";
  return out;
}

template <class S>
std::string to_csv(const OpMatrix<S>& m) {
  std::string out = "row,col,value\n";
  for (Eigen::Index i = 0; i < m.m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.m.cols(); ++j)
      out += csv_field(m.rows[static_cast<std::size_t>(i)]) + "," + csv_field(m.cols[static_cast<std::size_t>(j)]) +
             "," + csv_field(coeff_string(m.m(i, j))) + "\n";
  return out;
}

}  // namespace qsym
