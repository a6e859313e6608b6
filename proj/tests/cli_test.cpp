#include <gtest/gtest.h>

#include <array>
#include <map>
#include <set>
#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "qsym/intertwiners.hpp"
#include "qsym/parse.hpp"
#include "qsym/serialize.hpp"
#include "qsym/suites.hpp"

using namespace qsym;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

CliRun run(const std::string& args) {
  const std::string err_file = ::testing::TempDir() + "qsym_cli_stderr.txt";
  const std::string cmd = std::string(QSYM_CLI_PATH) + " " + args + " 2>" + err_file;
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  if (FILE* f = std::fopen(err_file.c_str(), "r")) {
    while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) r.err.append(buf.data(), n);
    std::fclose(f);
  }
  return r;
}

std::vector<json> json_lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);)
    if (!line.empty()) out.push_back(json::parse(line));
  return out;
}

Scalar lam_bracket() { return parse_scalar("(u - u^-1)/(q - q^-1)"); }
Scalar lamp_bracket() { return parse_scalar("(v - v^-1)/(q - q^-1)"); }

}  // namespace

TEST(CliExitCodes, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("compute").code, 2);
  EXPECT_EQ(run("compute qhahn --k 3 --N 2").code, 2);
  EXPECT_EQ(run("compute jacobi --n -1").code, 2);
  EXPECT_EQ(run("compute qrc --n 1 --f 'x^' --g y").code, 2);
  EXPECT_EQ(run("compute qrc --n 1 --f 'x*y' --g y").code, 2);
  EXPECT_EQ(run("compute phi --poly X").code, 2);
  EXPECT_EQ(run("verify --suite no-such-suite").code, 2);
  EXPECT_EQ(run("--mode point --trials 2 verify --suite lowest-weight").code, 2);
  EXPECT_EQ(run("--mode exotic verify").code, 2);
  EXPECT_EQ(run("--out yaml compute jacobi --n 1").code, 2);
  EXPECT_EQ(run("--numeric 1.0001 abc 3 verify --suite classical").code, 2);
  EXPECT_EQ(run("table cg --N 0").code, 2);
  const CliRun bad = run("compute qhahn --k 3 --N 2");
  EXPECT_TRUE(bad.out.empty());
  EXPECT_NE(bad.err.find("usage error"), std::string::npos);
}

TEST(CliExitCodes, HelpExitsZero) {
  const CliRun r = run("--help");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(CliExitCodes, VerifyPassAndFail) {
  EXPECT_EQ(run("verify --suite lowest-weight --max-n 8 --mode symbolic").code, 0);
  EXPECT_EQ(run("verify --suite qhahn-algebra --N 6").code, 0);
  const CliRun p = run("--poison verify --suite lowest-weight");
  EXPECT_EQ(p.code, 1);
  EXPECT_NE(p.err.find("first counterexample"), std::string::npos);
  const auto recs = json_lines(p.out);
  ASSERT_FALSE(recs.empty());
  EXPECT_EQ(recs.front().at("status"), "fail");
  EXPECT_FALSE(recs.front().at("counterexample").get<std::string>().empty());
}

TEST(CliExitCodes, EverySuiteFailsUnderPoison) {
  for (const char* mode : {"symbolic", "point"}) {
    const CliRun r = run(std::string("--mode ") + mode + " --poison --fail-fast verify");
    EXPECT_EQ(r.code, 1);
    std::map<std::string, bool> failed;
    for (const auto& rec : json_lines(r.out)) {
      const std::string suite = rec.at("params").at("suite");
      failed[suite] = failed[suite] || rec.at("status") == "fail";
    }
    EXPECT_EQ(failed.size(), suite_names().size()) << mode;
    for (const auto& [suite, f] : failed) EXPECT_TRUE(f) << suite << " " << mode;
  }
}

TEST(CliReports, EveryRecordMatchesSchema) {
  for (const char* args : {"--max-n 3 --max-degree 4 --N 3 verify",
                           "--mode point --trials 3 --max-n 3 --max-degree 4 --N 3 verify",
                           "--poison verify --suite jacobi --max-n 2"}) {
    const CliRun r = run(args);
    const auto recs = json_lines(r.out);
    ASSERT_FALSE(recs.empty()) << args;
    std::set<std::string> suites;
    for (const auto& rec : recs) {
      EXPECT_EQ(report_schema_violation(rec), "") << rec.dump();
      suites.insert(rec.at("params").at("suite"));
    }
    if (std::string(args).find("--suite") == std::string::npos) {
      EXPECT_EQ(suites.size(), suite_names().size()) << args;
    }
  }
}

TEST(CliReports, PointModeRecordsCarryPointAndTrial) {
  const CliRun r = run("--mode point --seed 7 verify --suite lowest-weight --max-n 2");
  EXPECT_EQ(r.code, 0);
  const auto recs = json_lines(r.out);
  ASSERT_EQ(recs.size(), 9u);
  std::set<std::string> points;
  for (const auto& rec : recs) {
    EXPECT_EQ(rec.at("mode"), "point");
    points.insert(rec.at("params").at("point").get<std::string>());
  }
  EXPECT_EQ(points.size(), 3u);
  EXPECT_EQ(run("--mode point --seed 7 verify --suite lowest-weight --max-n 2").out, r.out);
}

TEST(CliCompute, SpecExamples) {
  {
    const CliRun r = run("compute lowest-weight --n 1");
    ASSERT_EQ(r.code, 0);
    QPlanePoly<Scalar> got;
    const json value = json_lines(r.out).at(0).at("value");
    for (const auto& t : value) got.add_term(t[0], t[1], scalar_from_json(t[2]));
    QPlanePoly<Scalar> want;
    want.add_term(0, 1, lam_bracket());
    want.add_term(1, 0, -parse_scalar("v") * lamp_bracket());
    EXPECT_EQ(got, want);
  }
  {
    const CliRun r = run("compute jacobi --n 0");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json_lines(r.out).at(0).at("text"), "1");
  }
  {
    const CliRun r = run("compute qrc --n 0 --f x --g y");
    ASSERT_EQ(r.code, 0);
    OnePoly<Scalar> got;
    const json value = json_lines(r.out).at(0).at("value");
    for (const auto& t : value) got.add_term(t[0], scalar_from_json(t[1]));
    EXPECT_EQ(got, parse_one("u*z^2"));
  }
}

TEST(CliCompute, PhiRoundTripThroughCli) {
  const CliRun a = run("compute phi-inv --poly 'y*x + 2*x^2'");
  ASSERT_EQ(a.code, 0);
  const std::string tx = json_lines(a.out).at(0).at("text");
  const CliRun b = run("compute phi --poly '" + tx + "'");
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(parse_plane(json_lines(b.out).at(0).at("text")), parse_plane("y*x + 2*x^2"));
}

TEST(CliCompute, OtherFormats) {
  const CliRun latex = run("--out latex compute psi --n 1 --k 1");
  EXPECT_EQ(latex.code, 0);
  EXPECT_NE(latex.out.find("x y"), std::string::npos);
  const CliRun csv = run("--out csv compute qhahn --k 1 --N 2");
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.rfind("N,k,l,value\n", 0), 0u);
  const CliRun tx = run("--out csv compute psi --n 1 --k 0 --picture tx");
  EXPECT_EQ(tx.code, 0);
  EXPECT_EQ(tx.out.rfind("t_degree,X_degree,coefficient\n", 0), 0u);
  const CliRun pt = run("--mode point compute jacobi --n 3");
  EXPECT_EQ(pt.code, 0);
  EXPECT_EQ(json_lines(pt.out).at(0).at("mode"), "point");
}

TEST(CliTable, FirstOrderRows) {
  const CliRun r = run("table cg --N 1");
  ASSERT_EQ(r.code, 0);
  const auto t = json_lines(r.out).at(0).at("value");
  ASSERT_EQ(t.at("cols"), json({"x^0*y^1", "x^1*y^0"}));
  const auto& e = t.at("entries");
  EXPECT_EQ(scalar_from_json(e[0][1]), Scalar(1));
  EXPECT_EQ(scalar_from_json(e[0][0]), parse_scalar("u"));
  EXPECT_EQ(scalar_from_json(e[1][0]), lam_bracket());
  EXPECT_EQ(scalar_from_json(e[1][1]), -parse_scalar("v") * lamp_bracket());
}

TEST(CliTable, MatchesQHahnFormula) {
  const auto P = symbolic_params();
  const WeightExpr lam = WeightExpr::lambda();
  for (int N = 1; N <= 6; ++N) {
    const CliRun r = run("table cg --N " + std::to_string(N));
    ASSERT_EQ(r.code, 0);
    const json e = json_lines(r.out).at(0).at("value").at("entries");
    for (int k = 0; k <= N; ++k) {
      const auto Q = qhahn(P, k, N);
      for (int l = 0; l <= N; ++l) {
        const Scalar want = qpoch(P, lam, k) * P.power(-k * lam) * P.qbinom(N, l) * P.power((N - l) * (lam + l)) *
                            Q.values[static_cast<std::size_t>(l)];
        EXPECT_EQ(scalar_from_json(e[k][l]), want) << "N=" << N << " k=" << k << " l=" << l;
      }
    }
  }
}

TEST(CliVerify, ClassicalLimitUsesNumericFlag) {
  // Far from q = 1 the deviation is large; the check must report it.
  const CliRun far = run("--numeric 1.5 2.3 3.7 verify --suite classical");
  EXPECT_EQ(far.code, 1);
  const auto rec = json_lines(far.out).at(0);
  EXPECT_EQ(rec.at("mode"), "float");
  EXPECT_EQ(rec.at("params").at("q0"), "1.5");
}
