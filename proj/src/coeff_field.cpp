#include "qsym/coeff_field.hpp"

#include <cmath>
#include <sstream>

namespace qsym {

std::string WeightExpr::to_string() const {
  std::ostringstream os;
  bool any = false;
  auto emit = [&](int k, const char* sym) {
    if (k == 0) return;
    if (any) os << (k < 0 ? " - " : " + ");
    else if (k < 0) os << "-";
    const int m = std::abs(k);
    if (m != 1 || *sym == '\0') os << m;
    os << sym;
    any = true;
  };
  emit(a, "lambda");
  emit(b, "lambda'");
  emit(c, "");
  if (!any) os << "0";
  return os.str();
}

QParams<Scalar> symbolic_params() {
  return {Scalar::monomial(1, 0, 0), Scalar::monomial(0, 1, 0), Scalar::monomial(0, 0, 1)};
}

QParams<PointValue> point_params(const Rational& q0, const Rational& u0, const Rational& v0) {
  if (q0 == 0 || u0 == 0 || v0 == 0) throw DenominatorVanishes();
  return {PointValue(q0), PointValue(u0), PointValue(v0)};
}

QParams<double> float_params(double q0, double lambda0, double lambda0_prime) {
  return {q0, std::pow(q0, lambda0), std::pow(q0, lambda0_prime)};
}

SamplePoint sample_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(2, 97);
  auto draw = [&] {
    Rational r(dist(rng), dist(rng));
    r.canonicalize();
    return r;
  };
  SamplePoint p;
  p.q0 = draw();
  p.u0 = draw();
  p.v0 = draw();
  return p;
}

Rational scalar_eval(const Scalar& s, const SamplePoint& pt) {
  return s.evaluate(pt.q0, pt.u0, pt.v0);
}

}  // namespace qsym
