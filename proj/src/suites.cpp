#include "qsym/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "qsym/intertwiners.hpp"
#include "qsym/qhahn_algebra.hpp"

namespace qsym {

bool SuiteResult::ok() const {
  return std::all_of(records.begin(), records.end(), [](const SuiteRecord& r) { return r.report.ok; });
}

namespace {

struct StopSuite {};

/// Collects the reports of one suite run; hands out the poison flag once.
class Sink {
 public:
  Sink(const SuiteConfig& cfg, bool& poison_pending) : cfg_(cfg), poison_(poison_pending) {}

  const SuiteConfig& cfg() const { return cfg_; }
  int n(int fallback) const { return cfg_.max_n.value_or(fallback); }
  int degree(int fallback) const { return cfg_.max_degree.value_or(fallback); }
  int N(int fallback) const { return cfg_.N.value_or(fallback); }

  bool poison() {
    const bool p = poison_;
    poison_ = false;
    return p;
  }
  void add(Report r) {
    const bool failed = !r.ok;
    reports.push_back(std::move(r));
    if (failed && cfg_.fail_fast) throw StopSuite{};
  }

  std::vector<Report> reports;

 private:
  const SuiteConfig& cfg_;
  bool& poison_;
};

std::string point_string(const SamplePoint& pt) {
  return "q=" + pt.q0.get_str() + " u=" + pt.u0.get_str() + " v=" + pt.v0.get_str();
}

/// Runs an exact suite body symbolically or at cfg.trials random rational
/// points, resampling up to 10 times per trial when a denominator vanishes.
template <class Body>
SuiteResult run_exact(const std::string& name, const SuiteConfig& cfg, Body&& body) {
  SuiteResult out{name, {}};
  bool poison = cfg.poison;
  if (cfg.mode == Mode::Symbolic) {
    Sink sink(cfg, poison);
    try {
      body(symbolic_params(), sink);
    } catch (const StopSuite&) {
    }
    for (auto& r : sink.reports) out.records.push_back({std::move(r), "symbolic"});
    return out;
  }
  std::mt19937_64 rng(cfg.seed);
  for (int trial = 0; trial < cfg.trials; ++trial) {
    bool done = false;
    for (int attempt = 0; attempt <= 10 && !done; ++attempt) {
      const SamplePoint pt = sample_point(rng);
      bool trial_poison = poison;
      Sink sink(cfg, trial_poison);
      bool stopped = false;
      try {
        body(point_params(pt.q0, pt.u0, pt.v0), sink);
      } catch (const DenominatorVanishes&) {
        continue;
      } catch (const StopSuite&) {
        stopped = true;
      }
      poison = trial_poison;
      for (auto& r : sink.reports) {
        r.params["trial"] = std::to_string(trial);
        r.params["point"] = point_string(pt);
        out.records.push_back({std::move(r), "point"});
      }
      done = true;
      if (stopped) return out;
    }
    if (!done) {
      Report r{name, {{"trial", std::to_string(trial)}}, false, "no generic point found after 10 resamples"};
      out.records.push_back({std::move(r), "point"});
      if (cfg.fail_fast) return out;
    }
  }
  return out;
}

template <class S>
S small_coefficient(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-4, 4);
  int v = c(rng);
  return S(v == 0 ? 1 : v);
}

template <class S>
QPlanePoly<S> random_plane(std::mt19937_64& rng, const QParams<S>& P, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> count(1, 4);
  QPlanePoly<S> p;
  const int terms = count(rng);
  for (int i = 0; i < terms; ++i) {
    const int d = deg(rng);
    std::uniform_int_distribution<int> split(0, d);
    const int k = split(rng);
    p.add_term(k, d - k, small_coefficient<S>(rng) * P.u());
  }
  return p;
}

// --- coefficient field -----------------------------------------------------

Scalar random_field_element(std::mt19937_64& rng, const QParams<Scalar>& P) {
  std::uniform_int_distribution<int> w(-3, 3);
  std::uniform_int_distribution<int> c(1, 9);
  const Scalar num = qnum(P, {w(rng), w(rng), w(rng)}) + Scalar::monomial(w(rng), w(rng), w(rng), Rational(c(rng)));
  const Scalar den = qnum(P, {w(rng), w(rng), w(rng) + 7}) + Scalar(Rational(c(rng), 7));
  return num / den;
}

SuiteResult coeff_field_suite(const SuiteConfig& cfg) {
  SuiteResult out{"coeff-field", {}};
  bool poison = cfg.poison;
  const QParams<Scalar> P = symbolic_params();
  std::mt19937_64 rng(cfg.seed);

  Checker binom("qbinom-factorial", poison);
  poison = false;
  const int max_n = cfg.max_n.value_or(12);
  binom.param("max_n", max_n);
  for (int n = 0; n <= max_n && binom.ok(); ++n)
    for (int k = 0; k <= n; ++k)
      if (!binom.equal(qbinom(P, n, k) * qfact(P, k) * qfact(P, n - k), qfact(P, n),
                       "n=" + std::to_string(n) + " k=" + std::to_string(k)))
        break;
  out.records.push_back({binom.report(), "symbolic"});
  if (cfg.fail_fast && !binom.ok()) return out;

  Checker odd("qnum-odd");
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -3; c <= 3; ++c) odd.equal(qnum(P, -WeightExpr{a, b, c}), -qnum(P, {a, b, c}), "weight");
  out.records.push_back({odd.report(), "symbolic"});

  Checker axioms("field-axioms");
  for (int t = 0; t < 20 && axioms.ok(); ++t) {
    const Scalar a = random_field_element(rng, P);
    const Scalar b = random_field_element(rng, P);
    const Scalar c = random_field_element(rng, P);
    axioms.equal((a + b) + c, a + (b + c), "additive associativity");
    axioms.equal((a * b) * c, a * (b * c), "multiplicative associativity");
    axioms.equal(a * (b + c), a * b + a * c, "distributivity");
    if (!a.is_zero()) axioms.equal(a * a.inverse(), Scalar(1), "inverse");
  }
  out.records.push_back({axioms.report(), "symbolic"});

  Checker hom("eval-homomorphism");
  for (int t = 0; t < 20 && hom.ok(); ++t) {
    const Scalar a = random_field_element(rng, P);
    const Scalar b = random_field_element(rng, P);
    const SamplePoint pt = sample_point(rng);
    try {
      const Rational ea = scalar_eval(a, pt);
      const Rational eb = scalar_eval(b, pt);
      hom.equal(PointValue(scalar_eval(a * b, pt)), PointValue(Rational(ea * eb)), "eval(ab) at " + point_string(pt));
      hom.equal(PointValue(scalar_eval(a + b, pt)), PointValue(Rational(ea + eb)), "eval(a+b) at " + point_string(pt));
    } catch (const DenominatorVanishes&) {
    }
  }
  out.records.push_back({hom.report(), "symbolic"});
  return out;
}

// --- exact suites -------------------------------------------------------------

struct QuantumPlaneBody {
  template <class S>
  void operator()(const QParams<S>& P, Sink& s) const {
    std::mt19937_64 rng(s.cfg().seed);
    const int D = s.degree(8);
    Checker assoc("qp-mul-associativity", s.poison());
    assoc.param("max_degree", D);
    for (int t = 0; t < 10 && assoc.ok(); ++t) {
      const auto a = random_plane(rng, P, D / 2);
      const auto b = random_plane(rng, P, D / 2);
      const auto c = random_plane(rng, P, D / 2);
      assoc.equal(qp_mul(P, qp_mul(P, a, b), c), qp_mul(P, a, qp_mul(P, b, c)), "random triple " + std::to_string(t));
    }
    s.add(assoc.report());
    Checker pw("qp-pow-linear");
    QPlanePoly<S> acc(S(1));
    const QPlanePoly<S> lin = qp_pow_linear(P, P.u(), 1);
    for (int n = 0; n <= 6; ++n) {
      if (!pw.equal(qp_pow_linear(P, P.u(), n), acc, "n=" + std::to_string(n))) break;
      acc = qp_mul(P, acc, lin);
    }
    s.add(pw.report());
    s.add(phi_t_multiplication_check(P, D, s.poison()));
  }
};

struct LowestWeightBody {
  template <class S>
  void operator()(const QParams<S>& P, Sink& s) const {
    for (int n = 0; n <= s.n(8); ++n) s.add(lowest_weight_check(P, n, s.poison()));
  }
};

struct PhiBijectionBody {
  template <class S>
  void operator()(const QParams<S>& P, Sink& s) const {
    s.add(phi_bijection_check(P, s.degree(12), s.poison()));
  }
};

struct PhiPsiBody {
  template <class S>
  void operator()(const QParams<S>& P, Sink& s) const {
    for (int n = 0; n <= s.n(6); ++n)
      for (int k = 0; k <= s.degree(4); ++k) s.add(phi_psi_check(P, n, k, s.poison()));
  }
};

struct JacobiBody {
  template <class S>
  void operator()(const QParams<S>& P, Sink& s) const {
    for (int n = 0; n <= s.n(10); ++n) {
      s.add(jacobi_forms_check(P, n, s.poison()));
      s.add(jacobi_eigen_check(P, n, s.poison()));
    }
  }
};

struct TxActionBody {
  template <class S>
  void operator()(const QParams<S>& P, Sink& s) const {
    s.add(tx_consistency_check(P, s.degree(8), s.poison()));
    s.add(casimir_separation_check(P, s.degree(8), s.poison()));
  }
};

struct CgBody {
  template <class S>
  void operator()(const QParams<S>& P, Sink& s) const {
    for (int N = 1; N <= s.N(8); ++N) {
      for (int k = 0; k <= N; ++k) s.add(cg_expand_check(P, k, N, s.poison()));
      s.add(qhahn_top_check(P, N, s.poison()));
    }
  }
};

struct QHahnBody {
  template <class S>
  void operator()(const QParams<S>& P, Sink& s) const {
    for (int N = 1; N <= s.N(6); ++N) {
      for (int k = 0; k <= N; ++k) s.add(qhahn_diffop_check(P, k, N, s.poison()));
      s.add(qhahn_tridiagonal_check(P, N, s.poison()).report);
    }
  }
};

struct QHahnAlgebraBody {
  template <class S>
  void operator()(const QParams<S>& P, Sink& s) const {
    for (int N = 0; N <= s.N(6); ++N)
      for (Realization r : {Realization::TXPicture, Realization::Tensor})
        s.add(qhahn_algebra_check(P, r, N, s.poison()));
  }
};

struct AdjointBody {
  template <class S>
  void operator()(const QParams<S>& P, Sink& s) const {
    s.add(adjoint_check(P, s.degree(10), s.poison()));
  }
};

struct RelationsBody {
  template <class S>
  void operator()(const QParams<S>& P, Sink& s) const {
    s.add(relations_check(P, s.degree(10), s.poison()));
    s.add(casimir_centrality_check(P, s.degree(10), s.poison()));
  }
};

struct PsiIntertwiningBody {
  template <class S>
  void operator()(const QParams<S>& P, Sink& s) const {
    for (int n = 0; n <= s.n(6); ++n)
      for (int k = 0; k <= s.degree(6); ++k) s.add(psi_intertwining_check(P, n, k, s.poison()));
  }
};

struct QrcOracleBody {
  template <class S>
  void operator()(const QParams<S>& P, Sink& s) const {
    const int D = s.degree(8);
    for (int n = 0; n <= std::min(s.n(5), D); ++n) s.add(qrc_adjoint_oracle(P, n, D, s.poison()));
  }
};

struct QrcIntertwiningBody {
  template <class S>
  void operator()(const QParams<S>& P, Sink& s) const {
    const int D = s.degree(6);
    for (int n = 0; n <= std::min(s.n(4), D - 1); ++n) s.add(qrc_intertwining_check(P, n, D, s.poison()));
  }
};

struct QrcDegreeLawBody {
  template <class S>
  void operator()(const QParams<S>& P, Sink& s) const {
    for (int n = 0; n <= s.n(5); ++n) s.add(qrc_degree_law_check(P, n, s.degree(8), s.poison()));
  }
};

struct UniquenessBody {
  template <class S>
  void operator()(const QParams<S>& P, Sink& s) const {
    const int max_n = s.n(8);
    for (int n = 0; n <= max_n; ++n) s.add(uniqueness_check(P, n, max_n, s.poison()));
    s.add(psi_basis_check(P, s.degree(10), s.poison()));
  }
};

SuiteResult classical_suite(const SuiteConfig& cfg) {
  const auto r = classical_limit_check(cfg.q0, cfg.lambda0, cfg.lambda0_prime, cfg.max_n.value_or(3),
                                       cfg.max_degree.value_or(4), 1e-3, cfg.poison);
  return {"classical", {{r.report, "float"}}};
}

using Runner = std::function<SuiteResult(const SuiteConfig&)>;

template <class Body>
Runner exact(const std::string& name) {
  return [name](const SuiteConfig& cfg) { return run_exact(name, cfg, Body{}); };
}

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> r = {
      {"coeff-field", coeff_field_suite},
      {"quantum-plane", exact<QuantumPlaneBody>("quantum-plane")},
      {"lowest-weight", exact<LowestWeightBody>("lowest-weight")},
      {"phi-bijection", exact<PhiBijectionBody>("phi-bijection")},
      {"phi-psi", exact<PhiPsiBody>("phi-psi")},
      {"jacobi", exact<JacobiBody>("jacobi")},
      {"tx-action", exact<TxActionBody>("tx-action")},
      {"clebsch-gordan", exact<CgBody>("clebsch-gordan")},
      {"qhahn", exact<QHahnBody>("qhahn")},
      {"qhahn-algebra", exact<QHahnAlgebraBody>("qhahn-algebra")},
      {"adjoints", exact<AdjointBody>("adjoints")},
      {"relations", exact<RelationsBody>("relations")},
      {"psi-intertwining", exact<PsiIntertwiningBody>("psi-intertwining")},
      {"qrc-oracle", exact<QrcOracleBody>("qrc-oracle")},
      {"qrc-intertwining", exact<QrcIntertwiningBody>("qrc-intertwining")},
      {"qrc-degree-law", exact<QrcDegreeLawBody>("qrc-degree-law")},
      {"uniqueness", exact<UniquenessBody>("uniqueness")},
      {"classical", classical_suite},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, run] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (cfg.mode == Mode::Point && cfg.trials < 3) throw std::invalid_argument("point mode needs --trials >= 3");
  for (const auto& [n, run] : registry())
    if (n == name) {
      SuiteResult r = run(cfg);
      for (auto& rec : r.records) rec.report.params["suite"] = name;
      return r;
    }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace qsym
