#include <random>

#include "gtest/gtest.h"
#include "qsym/intertwiners.hpp"
#include "qsym/parse.hpp"
#include "qsym/serialize.hpp"
#include "test_util.hpp"

namespace qsym {
namespace {

const QParams<Scalar> P = symbolic_params();
const Scalar q = Scalar::monomial(1, 0, 0);
const Scalar u = Scalar::monomial(0, 1, 0);
const Scalar v = Scalar::monomial(0, 0, 1);
using Plane = QPlanePoly<Scalar>;
using TX = TXPoly<Scalar>;
using Z = OnePoly<Scalar>;

TEST(Parse, Literals) {
  EXPECT_EQ(parse_scalar("q"), q);
  EXPECT_EQ(parse_scalar("q^-1 + u^(2)*v"), Scalar(1) / q + u * u * v);
  EXPECT_EQ(parse_scalar("3/4"), Scalar(Rational(3, 4)));
  EXPECT_EQ(parse_scalar("-(q - q^-1)/(q + 1)"), -(q - Scalar(1) / q) / (q + Scalar(1)));
  EXPECT_EQ(parse_plane("x"), Plane::monomial(1, 0));
  EXPECT_EQ(parse_tx("t*X"), TX::monomial(1, 1));
  EXPECT_EQ(parse_one("z^3 - 2"), Z::monomial(3) - Z(Scalar(2)));
  EXPECT_EQ(parse_one("x^2", 'x'), Z::monomial(2));
}

TEST(Parse, PlaneIsNormalOrdered) {
  EXPECT_EQ(parse_plane("y*x"), Plane::monomial(1, 1, q * q));
  EXPECT_EQ(parse_plane("(x+y)^2"), qp_pow_linear(P, Scalar(1), 2));
  EXPECT_EQ(parse_plane("(x + u*y)^3"), qp_pow_linear(P, u, 3));
  EXPECT_EQ(parse_plane("y^2*x"), Plane::monomial(1, 2, P.qpow(4)));
}

TEST(Parse, TXDomainAndUsageErrors) {
  EXPECT_THROW(parse_tx("X"), DomainError);
  EXPECT_EQ(parse_tx("t*X - X + X"), TX::monomial(1, 1));
  EXPECT_THROW(parse_plane("z"), ParseError);
  EXPECT_THROW(parse_plane("x +"), ParseError);
  EXPECT_THROW(parse_plane("1/x"), ParseError);
  EXPECT_THROW(parse_plane("x^-1"), ParseError);
  EXPECT_THROW(parse_scalar("q/0"), ParseError);
  EXPECT_THROW(parse_scalar("(q"), ParseError);
  EXPECT_THROW(parse_scalar("qq"), ParseError);
  EXPECT_THROW(parse_one("y", 'x'), ParseError);
}

// parse -> serialize -> parse is the identity on a corpus covering every
// literal and operator.
TEST(Parse, RoundTripCorpus) {
  const std::vector<std::string> plane = {"x", "y", "y*x", "(x + q*y)^3 - 2/3*x*y", "-(u - v)/(q^2 + 1)*x^2*y",
                                          "q^-2*y^2*x + +x - -y", "(x+y)*(x-y)", "0", "7"};
  for (const auto& s : plane) {
    const Plane p = parse_plane(s);
    EXPECT_EQ(parse_plane(to_string(p)), p) << s << " -> " << to_string(p);
  }
  const std::vector<std::string> tx = {"t", "t*X", "t^3*X^2 - u*t", "(t - t*X)^2/(q - 1)"};
  for (const auto& s : tx) {
    const TX p = parse_tx(s);
    EXPECT_EQ(parse_tx(to_string(p)), p) << s;
  }
  const std::vector<std::string> one = {"z", "(z + u)^4/(v^2 - q)", "3/7*z^2 - z"};
  for (const auto& s : one) {
    const Z p = parse_one(s);
    EXPECT_EQ(parse_one(to_string(p)), p) << s;
  }
}

TEST(Parse, RoundTripComputedObjects) {
  const Plane p2 = lowest_weight_vector(P, 3).poly;
  EXPECT_EQ(parse_plane(to_string(p2)), p2);
  const TX t = phi_inv(P, psi_plane(P, 2, 1));
  EXPECT_EQ(parse_tx(to_string(t)), t);
}

TEST(Serialize, ScalarJsonRoundTrip) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    const Scalar s = testing::random_scalar(rng, P);
    const json j = to_json(s);
    ASSERT_TRUE(j.contains("num") && j.contains("den"));
    EXPECT_EQ(scalar_from_json(json::parse(j.dump())), s);
  }
  EXPECT_EQ(to_json(Scalar(Rational(1, 2))).dump(), R"({"den":[[0,0,0,"1"]],"num":[[0,0,0,"1/2"]]})");
  EXPECT_THROW(scalar_from_json(json::parse(R"({"num":[],"den":[]})")), std::invalid_argument);
}

TEST(Serialize, PolyGridMatrixShapes) {
  const json jp = to_json(qp_pow_linear(P, u, 1));
  ASSERT_EQ(jp.size(), 2u);
  EXPECT_EQ(jp[0][0], 0);
  EXPECT_EQ(jp[0][1], 1);
  EXPECT_EQ(scalar_from_json(jp[0][2]), u);
  const json jg = to_json(qhahn(P, 1, 2));
  EXPECT_EQ(jg["N"], 2);
  EXPECT_EQ(jg["k"], 1);
  EXPECT_EQ(jg["values"].size(), 3u);
  const auto m = psi_matrix(P, 1, 2);
  const json jm = to_json(m);
  EXPECT_EQ(jm["rows"].size(), static_cast<std::size_t>(m.m.rows()));
  EXPECT_EQ(jm["entries"][0].size(), static_cast<std::size_t>(m.m.cols()));
}

TEST(Serialize, LatexAndCsv) {
  EXPECT_EQ(to_latex(q + Scalar(1) / q), "q + q^{-1}");
  EXPECT_EQ(to_latex(Scalar(1) / (q - Scalar(1))), "\\frac{1}{q - 1}");
  EXPECT_EQ(to_latex(Plane::monomial(2, 1, u)), "\\left(u\\right) x^{2} y");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  const std::string csv = to_csv(Plane::monomial(1, 0));
  EXPECT_EQ(csv, "x_degree,y_degree,coefficient\n1,0,1\n");
}

TEST(Serialize, ReportSchema) {
  Report ok{"lowest-weight", {{"n", "3"}}, true, ""};
  EXPECT_EQ(report_schema_violation(report_to_json(ok, "symbolic")), "");
  Report bad{"x", {}, false, "lhs = 1; rhs = 0"};
  const json jb = report_to_json(bad, "point");
  EXPECT_EQ(report_schema_violation(jb), "");
  EXPECT_EQ(jb["status"], "fail");
  json broken = jb;
  broken.erase("counterexample");
  EXPECT_NE(report_schema_violation(broken), "");
  broken = jb;
  broken["mode"] = "fuzzy";
  EXPECT_NE(report_schema_violation(broken), "");
}

}  // namespace
}  // namespace qsym
