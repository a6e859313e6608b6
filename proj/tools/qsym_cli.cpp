// qsym: compute objects, run verification suites and print Clebsch-Gordan
// tables over Q(q, u, v) with u = q^lambda, v = q^lambda'.

#include <atomic>
#include <iostream>
#include <mutex>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qsym/intertwiners.hpp"
#include "qsym/parse.hpp"
#include "qsym/serialize.hpp"
#include "qsym/suites.hpp"

namespace {

using namespace qsym;

/// Bad parameters; mapped to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Global {
  std::string mode = "symbolic";
  std::uint64_t seed = 1;
  int trials = 3;
  std::string out = "json";
  std::optional<int> max_n;
  std::optional<int> max_degree;
  std::optional<int> N;
  bool poison = false;
  bool fail_fast = false;
  std::vector<std::string> numeric;
  int jobs = 0;
};

struct ComputeArgs {
  std::string object;
  int n = -1;
  int k = -1;
  int N = -1;
  std::string picture = "plane";
  std::string f;
  std::string g;
  std::string poly;
};

// --- coefficient conversion for point mode ----------------------------------

template <class S>
S convert(const Scalar& c, const SamplePoint& pt) {
  if constexpr (std::is_same_v<S, Scalar>) {
    (void)pt;
    return c;
  } else {
    return PointValue(scalar_eval(c, pt));
  }
}

template <class S, class Var>
Poly1<S, Var> convert(const Poly1<Scalar, Var>& p, const SamplePoint& pt) {
  Poly1<S, Var> r;
  for (const auto& [n, c] : p.terms()) r.add_term(n, convert<S>(c, pt));
  return r;
}

template <class S, class Tag>
Poly2<S, Tag> convert(const Poly2<Scalar, Tag>& p, const SamplePoint& pt) {
  Poly2<S, Tag> r;
  for (const auto& [k, c] : p.terms()) r.add_term(k.first, k.second, convert<S>(c, pt));
  return r;
}

// --- rendering ---------------------------------------------------------------

template <class T>
std::string text_of(const T& v) {
  if constexpr (requires { qsym::to_string(v); }) {
    return qsym::to_string(v);
  } else {
    return "";
  }
}

struct Output {
  std::string object;
  nlohmann::json params = nlohmann::json::object();
  std::string mode;
  std::string point;
};

template <class T>
void emit(const Output& o, const T& value, const std::string& fmt, std::ostream& os) {
  if (fmt == "latex") {
    os << to_latex(value) << "\n";
  } else if (fmt == "csv") {
    os << to_csv(value);
  } else {
    nlohmann::json j = {{"object", o.object}, {"params", o.params}, {"mode", o.mode}, {"value", to_json(value)}};
    const std::string text = text_of(value);
    if (!text.empty()) j["text"] = text;
    if (!o.point.empty()) j["point"] = o.point;
    os << j.dump() << "\n";
  }
}

void require(bool cond, const std::string& what) {
  if (!cond) throw UsageError(what);
}

// --- compute -----------------------------------------------------------------

template <class S>
void compute_with(const QParams<S>& P, const SamplePoint& pt, const ComputeArgs& a, const Output& base,
                  const std::string& fmt, std::ostream& os) {
  Output o = base;
  const std::string& obj = a.object;
  if (obj == "lowest-weight") {
    require(a.n >= 0, "lowest-weight needs --n >= 0");
    o.params["n"] = a.n;
    emit(o, lowest_weight_vector(P, a.n).poly, fmt, os);
  } else if (obj == "jacobi") {
    require(a.n >= 0, "jacobi needs --n >= 0");
    o.params["n"] = a.n;
    emit(o, little_qjacobi(P, a.n), fmt, os);
  } else if (obj == "qhahn") {
    require(a.N >= 0 && a.k >= 0 && a.k <= a.N, "qhahn needs 0 <= --k <= --N");
    o.params["k"] = a.k;
    o.params["N"] = a.N;
    emit(o, qhahn(P, a.k, a.N), fmt, os);
  } else if (obj == "psi") {
    require(a.n >= 0 && a.k >= 0, "psi needs --n >= 0 and --k >= 0");
    require(a.picture == "plane" || a.picture == "tx", "--picture must be plane or tx");
    o.params["n"] = a.n;
    o.params["k"] = a.k;
    o.params["picture"] = a.picture;
    if (a.picture == "plane") {
      emit(o, psi_plane(P, a.n, a.k), fmt, os);
    } else {
      emit(o, psi_tx(P, a.n, a.k), fmt, os);
    }
  } else if (obj == "qrc") {
    require(a.n >= 0, "qrc needs --n >= 0");
    require(!a.f.empty() && !a.g.empty(), "qrc needs --f and --g");
    o.params["n"] = a.n;
    o.params["f"] = a.f;
    o.params["g"] = a.g;
    const auto f = convert<S>(parse_one(a.f, 'x'), pt);
    const auto g = convert<S>(parse_one(a.g, 'y'), pt);
    emit(o, qrc(P, a.n, f, g), fmt, os);
  } else if (obj == "phi") {
    require(!a.poly.empty(), "phi needs --poly in t and X");
    o.params["poly"] = a.poly;
    emit(o, phi(P, convert<S>(parse_tx(a.poly), pt)), fmt, os);
  } else if (obj == "phi-inv") {
    require(!a.poly.empty(), "phi-inv needs --poly in x and y");
    o.params["poly"] = a.poly;
    emit(o, phi_inv(P, convert<S>(parse_plane(a.poly), pt)), fmt, os);
  } else {
    throw UsageError("unknown object " + obj);
  }
}

/// Rows k = 0..N, columns l = 0..N: coefficient of x^l y^{N-l} in
/// (x + q^lambda y)^{N-k} P_k.
template <class S>
OpMatrix<S> cg_table(const QParams<S>& P, int N) {
  OpMatrix<S> t{{}, {}, zero_matrix<S>(N + 1, N + 1)};
  for (int k = 0; k <= N; ++k) {
    t.rows.push_back("k=" + std::to_string(k));
    const QPlanePoly<S> p = psi_plane(P, k, N - k);
    for (int l = 0; l <= N; ++l) t.m(k, l) = p.coeff(l, N - l);
  }
  for (int l = 0; l <= N; ++l) t.cols.push_back("x^" + std::to_string(l) + "*y^" + std::to_string(N - l));
  return t;
}

/// Runs body(P, pt) symbolically or at a seeded generic point, resampling on
/// a vanishing denominator up to 10 times.
template <class Body>
void with_params(const Global& gl, Output base, Body&& body) {
  if (gl.mode == "symbolic") {
    base.mode = "symbolic";
    body(symbolic_params(), SamplePoint{}, base);
    return;
  }
  std::mt19937_64 rng(gl.seed);
  for (int attempt = 0; attempt <= 10; ++attempt) {
    const SamplePoint pt = sample_point(rng);
    base.mode = "point";
    base.point = "q=" + pt.q0.get_str() + " u=" + pt.u0.get_str() + " v=" + pt.v0.get_str();
    try {
      body(point_params(pt.q0, pt.u0, pt.v0), pt, base);
      return;
    } catch (const DenominatorVanishes&) {
    }
  }
  throw std::runtime_error("no generic point found after 10 resamples");
}

int cmd_compute(const Global& gl, const ComputeArgs& a) {
  with_params(gl, Output{a.object}, [&](const auto& P, const SamplePoint& pt, const Output& o) {
    compute_with(P, pt, a, o, gl.out, std::cout);
  });
  return 0;
}

int cmd_table(const Global& gl, int N) {
  require(N >= 1, "table cg needs --N >= 1");
  Output base{"cg-table"};
  base.params["N"] = N;
  with_params(gl, base, [&](const auto& P, const SamplePoint&, const Output& o) { emit(o, cg_table(P, N), gl.out, std::cout); });
  return 0;
}

// --- verify ------------------------------------------------------------------

double parse_decimal(const std::string& s) {
  std::size_t used = 0;
  double d = 0;
  try {
    d = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw UsageError("--numeric expects decimal numbers, got '" + s + "'");
  return d;
}

void write_record(const SuiteRecord& r, const std::string& fmt, std::ostream& os) {
  if (fmt == "csv") {
    std::string params;
    for (const auto& [k, v] : r.report.params) params += (params.empty() ? "" : ";") + k + "=" + v;
    os << csv_field(r.report.identity) << "," << csv_field(params) << "," << r.mode << ","
       << (r.report.ok ? "ok" : "fail") << "," << csv_field(r.report.counterexample) << "\n";
  } else if (fmt == "latex") {
    std::string params;
    for (const auto& [k, v] : r.report.params) params += (params.empty() ? "" : ", ") + k + "=" + v;
    os << "\\texttt{" << r.report.identity << "} & \\verb|" << params << "| & " << r.mode << " & "
       << (r.report.ok ? "ok" : "fail") << " \\\\\n";
  } else {
    os << report_to_json(r.report, r.mode).dump() << "\n";
  }
}

int cmd_verify(const Global& gl, std::vector<std::string> suites) {
  SuiteConfig cfg;
  require(gl.mode == "symbolic" || gl.mode == "point", "--mode must be symbolic or point");
  cfg.mode = gl.mode == "point" ? Mode::Point : Mode::Symbolic;
  require(cfg.mode == Mode::Symbolic || gl.trials >= 3, "point mode needs --trials >= 3");
  cfg.seed = gl.seed;
  cfg.trials = gl.trials;
  cfg.max_n = gl.max_n;
  cfg.max_degree = gl.max_degree;
  cfg.N = gl.N;
  cfg.poison = gl.poison;
  cfg.fail_fast = gl.fail_fast;
  for (const auto& b : {gl.max_n, gl.max_degree, gl.N}) require(!b || *b >= 0, "bounds must be non-negative");
  if (!gl.numeric.empty()) {
    require(gl.numeric.size() == 3, "--numeric takes q0 lambda0 lambda0'");
    cfg.q0 = parse_decimal(gl.numeric[0]);
    cfg.lambda0 = parse_decimal(gl.numeric[1]);
    cfg.lambda0_prime = parse_decimal(gl.numeric[2]);
    require(cfg.q0 > 0 && cfg.q0 != 1, "--numeric needs q0 > 0 and q0 != 1");
  }
  if (suites.empty() || (suites.size() == 1 && suites[0] == "all")) suites = suite_names();
  for (const auto& s : suites) require(is_suite(s), "unknown suite '" + s + "'");

  if (gl.out == "csv") std::cout << "identity,params,mode,status,counterexample\n";
  if (gl.out == "latex") std::cout << "\\begin{tabular}{llll}\nidentity & parameters & mode & status \\\\\n\\hline\n";

  // Suites are independent tasks; a single writer serializes the records.
  std::mutex out_mutex;
  std::atomic<std::size_t> next{0};
  bool all_ok = true;
  std::string first_failure;
  auto worker = [&] {
    for (std::size_t i = next++; i < suites.size(); i = next++) {
      SuiteResult res;
      try {
        res = run_suite(suites[i], cfg);
      } catch (const std::exception& e) {
        Report r{suites[i], {{"suite", suites[i]}}, false, std::string("exception: ") + e.what()};
        res = {suites[i], {{r, cfg.mode == Mode::Point ? "point" : "symbolic"}}};
      }
      std::lock_guard<std::mutex> lock(out_mutex);
      for (const auto& r : res.records) {
        write_record(r, gl.out, std::cout);
        if (!r.report.ok && all_ok) {
          all_ok = false;
          first_failure = r.report.identity + ": " + r.report.counterexample;
        }
      }
      std::cout.flush();
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t jobs = std::min<std::size_t>(gl.jobs > 0 ? static_cast<std::size_t>(gl.jobs) : hw, suites.size());
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  if (gl.out == "latex") std::cout << "\\end{tabular}\n";
  if (!all_ok) {
    std::cerr << "first counterexample: " << first_failure << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with q-deformed Rankin-Cohen brackets over Q(q, u, v), u = q^lambda, v = q^lambda'"};
  app.fallthrough();
  app.require_subcommand(1);

  Global gl;
  app.add_option("--mode", gl.mode, "Coefficient mode")->check(CLI::IsMember({"symbolic", "point"}));
  app.add_option("--seed", gl.seed, "Seed for generic points and random inputs");
  app.add_option("--trials", gl.trials, "Number of generic points in point mode (>= 3)");
  app.add_option("--out", gl.out, "Output format")->check(CLI::IsMember({"json", "latex", "csv"}));
  app.add_option("--max-n", gl.max_n, "Bound on n (overrides suite defaults)");
  app.add_option("--max-degree", gl.max_degree, "Bound on degrees and truncations (overrides suite defaults)");
  app.add_option("--N", gl.N, "Bound on N for Clebsch-Gordan and q-Hahn suites");
  app.add_flag("--poison", gl.poison, "Corrupt one coefficient of the first comparison (negative control)");
  app.add_flag("--fail-fast", gl.fail_fast, "Stop each verify suite at its first failed identity");
  app.add_option("--numeric", gl.numeric, "q0 lambda0 lambda0' for the classical-limit float check")->expected(3);
  app.add_option("--jobs", gl.jobs, "Worker threads for verify (default: hardware concurrency)");

  ComputeArgs ca;
  auto* compute = app.add_subcommand("compute", "Compute an exact object");
  compute->require_subcommand(1);
  auto add_object = [&](const std::string& name, const std::string& desc) {
    auto* s = compute->add_subcommand(name, desc);
    s->callback([&ca, name] { ca.object = name; });
    return s;
  };
  auto* lw = add_object("lowest-weight", "Lowest-weight vector P_n in the quantum plane");
  lw->add_option("--n", ca.n)->required();
  auto* jac = add_object("jacobi", "Little q-Jacobi polynomial j_n(X)");
  jac->add_option("--n", ca.n)->required();
  auto* qh = add_object("qhahn", "q-Hahn polynomial Q_k^(N) on the grid q^{-2l}, l = 0..N");
  qh->add_option("--k", ca.k)->required();
  qh->add_option("--N", ca.N)->required();
  auto* psi = add_object("psi", "Image (x + q^lambda y)^k P_n of z^{n+k} under the holographic operator");
  psi->add_option("--n", ca.n)->required();
  psi->add_option("--k", ca.k)->required();
  psi->add_option("--picture", ca.picture, "plane or tx")->check(CLI::IsMember({"plane", "tx"}));
  auto* rc = add_object("qrc", "q-Rankin-Cohen bracket of f(x) and g(y), a polynomial in z");
  rc->add_option("--n", ca.n)->required();
  rc->add_option("--f", ca.f, "Polynomial in x")->required();
  rc->add_option("--g", ca.g, "Polynomial in y")->required();
  auto* ph = add_object("phi", "Quantum-plane image of a polynomial in t, X (with powers of X bounded by powers of t)");
  ph->add_option("--poly", ca.poly)->required();
  auto* phi_inv_cmd = add_object("phi-inv", "Preimage in t, X of a quantum-plane polynomial");
  phi_inv_cmd->add_option("--poly", ca.poly)->required();

  std::vector<std::string> suites;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suites, "Suite name or 'all' (repeatable)")->take_all();

  int table_N = 0;
  auto* table = app.add_subcommand("table", "Emit a coefficient table");
  auto* cg = table->add_subcommand("cg", "Clebsch-Gordan coefficients of (x + q^lambda y)^{N-k} P_k");
  cg->add_option("--N", table_N)->required();
  table->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*compute) return cmd_compute(gl, ca);
    if (*verify) return cmd_verify(gl, suites);
    if (*table) return cmd_table(gl, table_N);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const IndexOutOfRange& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
