#include "qsym/serialize.hpp"

#include <stdexcept>

namespace qsym {

json laurent_to_json(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [key, c] : p.terms()) {
    const Monomial m = mono::unpack(key);
    out.push_back({m.q, m.u, m.v, c.get_str()});
  }
  return out;
}

LaurentPoly laurent_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("Laurent polynomial: expected an array of terms");
  std::vector<LaurentPoly::Term> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 4 || !t[3].is_string())
      throw std::invalid_argument("Laurent polynomial: expected [e_q, e_u, e_v, \"p/r\"]");
    Rational c;
    if (c.set_str(t[3].get<std::string>(), 10) != 0) throw std::invalid_argument("bad rational " + t[3].dump());
    c.canonicalize();
    const Monomial m{t[0].get<int>(), t[1].get<int>(), t[2].get<int>()};
    for (int e : {m.q, m.u, m.v})
      if (e <= -mono::kOffset || e >= mono::kOffset) throw std::invalid_argument("exponent out of range");
    terms.emplace_back(mono::pack(m), c);
  }
  return LaurentPoly::from_terms(std::move(terms));
}

json to_json(const Scalar& s) {
  return {{"num", laurent_to_json(s.numerator())}, {"den", laurent_to_json(s.denominator())}};
}

Scalar scalar_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw std::invalid_argument("Scalar: expected {\"num\": ..., \"den\": ...}");
  const LaurentPoly den = laurent_from_json(j.at("den"));
  if (den.is_zero()) throw std::invalid_argument("Scalar: zero denominator");
  return Scalar::factored(laurent_from_json(j.at("num"))) / Scalar::factored(den);
}

json report_to_json(const Report& r, const std::string& mode) {
  json out = {{"identity", r.identity},
              {"params", r.params},
              {"mode", mode},
              {"status", r.ok ? "ok" : "fail"}};
  if (!r.ok) out["counterexample"] = r.counterexample;
  return out;
}

std::string report_schema_violation(const json& j) {
  if (!j.is_object()) return "record is not an object";
  for (const char* key : {"identity", "mode", "status"})
    if (!j.contains(key) || !j.at(key).is_string()) return std::string("missing string field ") + key;
  if (!j.contains("params") || !j.at("params").is_object()) return "missing object field params";
  for (const auto& [k, v] : j.at("params").items())
    if (!v.is_string()) return "param " + k + " is not a string";
  const auto mode = j.at("mode").get<std::string>();
  if (mode != "symbolic" && mode != "point" && mode != "float") return "bad mode " + mode;
  const auto status = j.at("status").get<std::string>();
  if (status != "ok" && status != "fail") return "bad status " + status;
  if (j.contains("counterexample") && !j.at("counterexample").is_string()) return "counterexample is not a string";
  if (status == "fail" && !j.contains("counterexample")) return "failed record without counterexample";
  for (const auto& [k, v] : j.items())
    if (k != "identity" && k != "params" && k != "mode" && k != "status" && k != "counterexample")
      return "unexpected field " + k;
  return "";
}

namespace {
std::string latex_rational(const Rational& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
}
}  // namespace

std::string to_latex(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
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
    if (c != 1 || unit_mono) os << latex_rational(c);
    os << detail::latex_power("q", m.q) << detail::latex_power("u", m.u) << detail::latex_power("v", m.v);
  }
  return os.str();
}

std::string to_latex(const Scalar& s) {
  const LaurentPoly d = s.denominator();
  if (d.is_one()) return to_latex(s.numerator());
  return "\\frac{" + to_latex(s.numerator()) + "}{" + to_latex(d) + "}";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace qsym
