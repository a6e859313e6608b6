#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "qsym/uqsl2_actions.hpp"

namespace qsym {

/// Lowest-weight vector of weight lambda + lambda' + 2n in the quantum plane.
template <class S>
struct LowestWeightVector {
  int n = 0;
  QPlanePoly<S> poly;
};

/// [lambda]_n [lambda']_n / ([lambda]_k [lambda']_{n-k}) [n k] (-1)^k q^{k(lambda'+2n-k-1)},
/// the coefficient shared by P_n and the q-Rankin-Cohen bracket.
template <class S>
S bracket_coefficient(const QParams<S>& P, int n, int k) {
  const WeightExpr lam = WeightExpr::lambda();
  const WeightExpr lamp = WeightExpr::lambda_prime();
  S c = qpoch(P, lam, n) * qpoch(P, lamp, n) / (qpoch(P, lam, k) * qpoch(P, lamp, n - k)) *
        P.qbinom(n, k) * P.power(k * (lamp + (2 * n - k - 1)));
  return k % 2 == 0 ? c : -c;
}

/// P_n = sum_k bracket_coefficient(n, k) x^k y^{n-k}, unverified.
template <class S>
QPlanePoly<S> lowest_weight_poly(const QParams<S>& P, int n) {
  if (n < 0) throw std::invalid_argument("lowest_weight_poly: n must be non-negative");
  QPlanePoly<S> r;
  for (int k = 0; k <= n; ++k) r.add_term(k, n - k, bracket_coefficient(P, n, k));
  return r;
}

template <class S>
LowestWeightVector<S> lowest_weight_vector(const QParams<S>& P, int n) {
  LowestWeightVector<S> v{n, lowest_weight_poly(P, n)};
  if (!tensor_act(P, Generator::F, v.poly).is_zero())
    throw std::logic_error("lowest_weight_vector: not annihilated by Delta(F)");
  if (tensor_act(P, Generator::K, v.poly) != P.power(WeightExpr{1, 1, 2 * n}) * v.poly)
    throw std::logic_error("lowest_weight_vector: wrong Delta(K) eigenvalue");
  return v;
}

/// Delta(F) P_n = 0 and Delta(K) P_n = q^{lambda+lambda'+2n} P_n.
template <class S>
Report lowest_weight_check(const QParams<S>& P, int n, bool poison = false) {
  Checker c("lowest-weight", poison);
  c.param("n", n);
  const QPlanePoly<S> v = lowest_weight_poly(P, n);
  if (!c.equal(tensor_act(P, Generator::F, v), QPlanePoly<S>(), "Delta(F) P_n")) return c.report();
  c.equal(tensor_act(P, Generator::K, v), P.power(WeightExpr{1, 1, 2 * n}) * v, "Delta(K) P_n");
  return c.report();
}

/// Holographic operator images: (x + q^lambda y)^k P_n in the plane.
template <class S>
QPlanePoly<S> psi_plane(const QParams<S>& P, int n, int k) {
  return qp_mul(P, qp_pow_linear(P, P.u(), k), lowest_weight_vector(P, n).poly);
}

/// t^{k+n} j_n(X) in the (t, X) picture.
template <class S>
TXPoly<S> psi_tx(const QParams<S>& P, int n, int k) {
  TXPoly<S> r;
  const XPoly<S> j = little_qjacobi(P, n);
  for (const auto& [d, c] : j.terms()) r.add_term(n + k, d, c);
  return r;
}

/// Extends z^k -> psi(n, k) linearly to C[z].
template <class S>
QPlanePoly<S> psi_apply(const QParams<S>& P, int n, const OnePoly<S>& f) {
  QPlanePoly<S> r;
  for (const auto& [k, c] : f.terms()) r += c * psi_plane(P, n, k);
  return r;
}

/// One summand of the q-Rankin-Cohen bracket:
/// coefficient * D^k f(z) * D^{n-k} g(q^shift z).
struct BracketTerm {
  int k = 0;
  WeightExpr shift;
};

template <class S>
struct BracketTermValue {
  BracketTerm term;
  S coefficient;
};

template <class S>
std::vector<BracketTermValue<S>> qrc_terms(const QParams<S>& P, int n) {
  std::vector<BracketTermValue<S>> out;
  for (int k = 0; k <= n; ++k)
    out.push_back({{k, WeightExpr::lambda() + 2 * k}, bracket_coefficient(P, n, k)});
  return out;
}

template <class S>
OnePoly<S> dq2_power(const QParams<S>& P, OnePoly<S> f, int k) {
  for (int i = 0; i < k && !f.is_zero(); ++i) f = dq_deriv(P, DerivStep::QSquared, f);
  return f;
}

/// q-Rankin-Cohen bracket of f (in x) and g (in y), as a polynomial in z.
template <class S>
OnePoly<S> qrc(const QParams<S>& P, int n, const OnePoly<S>& f, const OnePoly<S>& g) {
  if (n < 0) throw std::invalid_argument("qrc: n must be non-negative");
  OnePoly<S> r;
  for (const auto& t : qrc_terms(P, n)) {
    const OnePoly<S> fk = dq2_power(P, f, t.term.k);
    if (fk.is_zero()) continue;
    const OnePoly<S> gk = dq2_power(P, g, n - t.term.k);
    if (gk.is_zero()) continue;
    r += t.coefficient * (fk * dilate(P, gk, t.term.shift));
  }
  return r;
}

/// The bracket on C[x] (x) C[y], identifying x^a y^b with x^a (x) y^b.
template <class S>
OnePoly<S> qrc_plane(const QParams<S>& P, int n, const QPlanePoly<S>& h) {
  OnePoly<S> r;
  for (const auto& [key, c] : h.terms())
    r += c * qrc(P, n, OnePoly<S>::monomial(key.first), OnePoly<S>::monomial(key.second));
  return r;
}

/// Clebsch-Gordan expansions: the plane identity
/// (x+uy)^{N-k} P_k = [lambda]_k q^{-lambda k} sum_l [N l] q^{(lambda+l)(N-l)} Q_k(q^{-2l}) x^l y^{N-l}
/// and the X-picture identity
/// j_k = sum_l [N l] q^{-l(N-l)} Q_k(q^{-2l}) prod_{s<N-l}(1 - q^{-2s}X) X^l.
template <class S>
Report cg_expand_check(const QParams<S>& P, int k, int N, bool poison = false) {
  if (N < 1 || k < 0 || k > N) throw IndexOutOfRange("cg_expand_check: need 0 <= k <= N, N >= 1");
  Checker c("cg-expand", poison);
  c.param("k", k).param("N", N);
  const GridFunction<S> Q = qhahn(P, k, N);
  const WeightExpr lam = WeightExpr::lambda();
  QPlanePoly<S> rhs;
  XPoly<S> rhs_x;
  for (int l = 0; l <= N; ++l) {
    const S& ql = Q.values[static_cast<std::size_t>(l)];
    rhs.add_term(l, N - l, P.qbinom(N, l) * P.power((N - l) * (lam + l)) * ql);
    const S cx = P.qbinom(N, l) * P.qpow(-l * (N - l)) * ql;
    const XPoly<S> fall = falling_product(P, N - l);
    for (const auto& [d, e] : fall.terms()) rhs_x.add_term(d + l, cx * e);
  }
  rhs = (qpoch(P, lam, k) * P.power(-k * lam)) * rhs;
  c.equal(psi_plane(P, k, N - k), rhs, "plane picture");
  c.equal(little_qjacobi(P, k), rhs_x, "X picture");
  return c.report();
}

/// The image of the k-th psi vector under phi, scaled:
/// phi([lambda]_n t^{n+k} j_n) = q^{n lambda} (x + uy)^k P_n.
template <class S>
Report phi_psi_check(const QParams<S>& P, int n, int k, bool poison = false) {
  Checker c("phi-psi", poison);
  c.param("n", n).param("k", k);
  const WeightExpr lam = WeightExpr::lambda();
  c.equal(phi(P, qpoch(P, lam, n) * psi_tx(P, n, k)), P.power(n * lam) * psi_plane(P, n, k),
          "phi([lambda]_n t^(n+k) j_n)");
  return c.report();
}

/// tensor_act(g, psi(n, k)) = psi_n(verma_act(g, z^k)) at weight lambda+lambda'+2n.
template <class S>
Report psi_intertwining_check(const QParams<S>& P, int n, int k, bool poison = false) {
  Checker c("psi-intertwining", poison);
  c.param("n", n).param("k", k);
  const WeightExpr mu{1, 1, 2 * n};
  const QPlanePoly<S> v = psi_plane(P, n, k);
  for (Generator g : all_generators()) {
    const auto rhs = psi_apply(P, n, verma_act(P, g, OnePoly<S>::monomial(k), mu));
    if (!c.equal(tensor_act(P, g, v), rhs, std::string("generator ") + generator_name(g))) break;
  }
  return c.report();
}

/// Matrices of psi_n : C[z]_{<= D-n} -> plane_{<= D} and of the bracket
/// plane_{<= D} -> C[z]_{<= D-n}.
template <class S>
OpMatrix<S> psi_matrix(const QParams<S>& P, int n, int D) {
  if (D < n) throw TruncationLeak("psi_matrix: degree bound below n");
  return truncate_operator<OnePoly<S>, QPlanePoly<S>>([&](const OnePoly<S>& f) { return psi_apply(P, n, f); },
                                                      D - n, D);
}

template <class S>
OpMatrix<S> qrc_matrix(const QParams<S>& P, int n, int D) {
  if (D < n) throw TruncationLeak("qrc_matrix: degree bound below n");
  return truncate_operator<QPlanePoly<S>, OnePoly<S>>([&](const QPlanePoly<S>& h) { return qrc_plane(P, n, h); },
                                                      D, D - n);
}

/// The bracket is the Fischer adjoint of psi_n: matrix comparison and the
/// pairing identity <psi_n(z^j), x^a y^b> = <z^j, qrc(n, x^a, y^b)>.
template <class S>
Report qrc_adjoint_oracle(const QParams<S>& P, int n, int D, bool poison = false) {
  Checker c("qrc-adjoint", poison);
  c.param("n", n).param("D", D);
  const auto psi = psi_matrix(P, n, D);
  const auto br = qrc_matrix(P, n, D);
  const auto adj = adjoint(psi.m, fischer_gram_one(P, D - n), fischer_gram_plane(P, D));
  if (!equal_matrices(c, adj, br.m, "adjoint(psi_n) vs qrc_n", br.rows, br.cols)) return c.report();
  for (int j = 0; j <= D - n; ++j) {
    const QPlanePoly<S> img = psi_plane(P, n, j);
    const OnePoly<S> zj = OnePoly<S>::monomial(j);
    for (const auto& [a, b] : BasisTraits<QPlanePoly<S>>::keys(D)) {
      const S lhs = fischer_inner_tensor(P, img, QPlanePoly<S>::monomial(a, b));
      const S rhs = fischer_inner(P, zj, qrc(P, n, OnePoly<S>::monomial(a), OnePoly<S>::monomial(b)));
      if (!c.equal(lhs, rhs, "pairing j=" + std::to_string(j) + " a=" + std::to_string(a) +
                                 " b=" + std::to_string(b)))
        return c.report();
    }
  }
  return c.report();
}

/// qrc_n o adjoint(tensor_act(S(g))) = contragredient_{lambda+lambda'+2n}(g) o qrc_n
/// on truncations, with S(K) = K^{-1}, S(E) = -K^{-1}E, S(F) = -FK.
template <class S>
Report qrc_intertwining_check(const QParams<S>& P, int n, int D, bool poison = false) {
  Checker c("qrc-intertwining", poison);
  c.param("n", n).param("D", D);
  if (D < n + 1) throw TruncationLeak("qrc_intertwining_check: need D >= n + 1");
  using Plane = QPlanePoly<S>;
  using Z = OnePoly<S>;
  const WeightExpr mu{1, 1, 2 * n};
  const auto dual = [&](Generator g, const Z& f) { return contragredient_act(P, g, f, mu); };
  struct Case {
    Generator g;
    int d_act_dom, d_act_cod;  // truncation of pi(S(g)) on the plane
  };
  const std::vector<Case> cases{{Generator::K, D, D}, {Generator::E, D - 1, D}, {Generator::F, D, D - 1}};
  for (const auto& cs : cases) {
    const auto antipode = [&](const Plane& h) -> Plane {
      switch (cs.g) {
        case Generator::K:
          return tensor_act(P, Generator::Kinv, h);
        case Generator::E:
          return S(-1) * tensor_act(P, Generator::Kinv, tensor_act(P, Generator::E, h));
        default:
          return S(-1) * tensor_act(P, Generator::F, tensor_act(P, Generator::K, h));
      }
    };
    const auto m = truncate_operator<Plane, Plane>(antipode, cs.d_act_dom, cs.d_act_cod);
    // dual action on the plane goes from degree <= d_act_cod to <= d_act_dom
    const Mat<S> dual_plane =
        adjoint(m.m, fischer_gram_plane(P, cs.d_act_dom), fischer_gram_plane(P, cs.d_act_cod));
    const Mat<S> lhs = mat_mul(qrc_matrix(P, n, cs.d_act_dom).m, dual_plane);
    const auto br = qrc_matrix(P, n, cs.d_act_cod);
    const auto dz = truncate_operator<Z, Z>([&](const Z& f) { return dual(cs.g, f); }, cs.d_act_cod - n,
                                            cs.d_act_dom - n);
    const Mat<S> rhs = mat_mul(dz.m, br.m);
    if (!equal_matrices(c, lhs, rhs, std::string("generator ") + generator_name(cs.g), dz.rows, br.cols)) break;
  }
  return c.report();
}

/// Rank of a matrix over Q(q, u, v). For symbolic entries the rank is
/// certified at random rational points: the rank at any point is a lower
/// bound, so a point reaching `expected` proves it. Exact elimination
/// otherwise.
template <class S>
int certified_rank(const Mat<S>& m, int expected, std::uint64_t seed = 7) {
  if constexpr (std::is_same_v<S, Scalar>) {
    std::mt19937_64 rng(seed);
    int best = 0;
    for (int attempt = 0; attempt < 10 && best < expected; ++attempt) {
      const SamplePoint pt = sample_point(rng);
      try {
        Mat<PointValue> e(m.rows(), m.cols());
        for (Eigen::Index i = 0; i < m.rows(); ++i)
          for (Eigen::Index j = 0; j < m.cols(); ++j) e(i, j) = PointValue(scalar_eval(m(i, j), pt));
        best = std::max(best, rank(e));
      } catch (const DenominatorVanishes&) {
      }
    }
    return best;
  } else {
    return rank(m);
  }
}

/// The joint solution space of Delta(F) v = 0, Delta(K) v = q^{lambda+lambda'+2n} v
/// in the plane of total degree <= D is one-dimensional and contains P_n.
template <class S>
Report uniqueness_check(const QParams<S>& P, int n, int D, bool poison = false) {
  Checker c("lowest-weight-uniqueness", poison);
  c.param("n", n).param("D", D);
  using Plane = QPlanePoly<S>;
  const auto F = truncate_operator<Plane, Plane>([&](const Plane& h) { return tensor_act(P, Generator::F, h); }, D, D);
  const auto K = truncate_operator<Plane, Plane>([&](const Plane& h) { return tensor_act(P, Generator::K, h); }, D, D);
  const Eigen::Index dim = K.m.cols();
  Mat<S> stacked = zero_matrix<S>(2 * dim, dim);
  const S target = P.power(WeightExpr{1, 1, 2 * n});
  // K rows first: they are diagonal, so elimination never fills in
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) {
      stacked(i, j) = i == j ? K.m(i, j) - target : K.m(i, j);
      stacked(dim + i, j) = F.m(i, j);
    }
  const int kernel = static_cast<int>(dim) - rank(stacked);
  c.equal(kernel, 1, "kernel dimension");
  const Plane pn = lowest_weight_vector(P, n).poly;
  c.require(tensor_act(P, Generator::F, pn).is_zero(), "P_n annihilated by Delta(F)");
  return c.report();
}

/// The vectors psi(n, k), n + k <= D, form a basis of the plane of total
/// degree <= D. Each degree d block (d+1 vectors) is checked for full rank.
template <class S>
Report psi_basis_check(const QParams<S>& P, int D, bool poison = false) {
  Checker c("psi-basis", poison);
  c.param("D", D);
  int total = 0;
  for (int d = 0; d <= D; ++d) {
    Mat<S> block = zero_matrix<S>(d + 1, d + 1);
    for (int n = 0; n <= d; ++n) {
      const QPlanePoly<S> v = psi_plane(P, n, d - n);
      for (const auto& [key, coef] : v.terms()) {
        if (key.first + key.second != d) throw std::logic_error("psi vector not homogeneous");
        block(key.first, n) = coef;
      }
    }
    total += certified_rank(block, d + 1);
  }
  c.equal(total, (D + 1) * (D + 2) / 2, "rank of {psi(n,k) : n+k <= D}");
  return c.report();
}

/// Delta(C) psi(n, k) = (q^{mu-1} + q^{1-mu}) psi(n, k), mu = lambda + lambda' + 2n,
/// in both pictures.
template <class S>
Report casimir_separation_check(const QParams<S>& P, int max_total, bool poison = false) {
  Checker c("casimir-separation", poison);
  c.param("max", max_total);
  for (int n = 0; n <= max_total; ++n) {
    const WeightExpr e{1, 1, 2 * n - 1};
    const S ev = P.power(e) + P.power(-e);
    for (int k = 0; n + k <= max_total; ++k) {
      const auto where = " n=" + std::to_string(n) + " k=" + std::to_string(k);
      const TXPoly<S> vt = psi_tx(P, n, k);
      if (!c.equal(casimir_tensor_tx(P, vt), ev * vt, "tx picture" + where)) return c.report();
      const QPlanePoly<S> vp = psi_plane(P, n, k);
      if (!c.equal(casimir_tensor(P, vp), ev * vp, "plane picture" + where)) return c.report();
    }
  }
  return c.report();
}

/// qrc(n, z^a, z^b) is zero iff a + b < n, and otherwise homogeneous of degree a + b - n.
template <class S>
Report qrc_degree_law_check(const QParams<S>& P, int n, int max_degree, bool poison = false) {
  Checker c("qrc-degree-law", poison);
  c.param("n", n).param("max", max_degree);
  for (int a = 0; a <= max_degree; ++a)
    for (int b = 0; a + b <= max_degree; ++b) {
      const OnePoly<S> r = qrc(P, n, OnePoly<S>::monomial(a), OnePoly<S>::monomial(b));
      const int expected = a + b < n ? -1 : a + b - n;
      const int lowest = r.is_zero() ? -1 : r.terms().begin()->first;
      const auto where = " a=" + std::to_string(a) + " b=" + std::to_string(b);
      if (!c.equal(r.degree(), expected, "degree" + where)) return c.report();
      if (!c.equal(lowest, expected, "homogeneity" + where)) return c.report();
    }
  return c.report();
}

/// q -> 1 limit of the bracket: sum_k C(n,k) (-1)^k (l)_n (l')_n / ((l)_k (l')_{n-k}) f^(k) g^(n-k)
/// with rising factorials (x)_k.
inline std::vector<double> classical_rc(int n, double l, double lp, const std::vector<double>& f,
                                        const std::vector<double>& g) {
  auto rising = [](double x, int k) {
    double r = 1;
    for (int i = 0; i < k; ++i) r *= x + i;
    return r;
  };
  auto deriv = [](std::vector<double> p, int k) {
    for (int i = 0; i < k; ++i) {
      if (p.empty()) break;
      std::vector<double> d(p.size() - 1);
      for (std::size_t m = 1; m < p.size(); ++m) d[m - 1] = static_cast<double>(m) * p[m];
      p = std::move(d);
    }
    return p;
  };
  std::vector<double> out(f.size() + g.size(), 0.0);
  double binom = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) binom = binom * (n - k + 1) / k;
    const double c = (k % 2 == 0 ? 1 : -1) * binom * rising(l, n) * rising(lp, n) / (rising(l, k) * rising(lp, n - k));
    const auto fk = deriv(f, k);
    const auto gk = deriv(g, n - k);
    for (std::size_t i = 0; i < fk.size(); ++i)
      for (std::size_t j = 0; j < gk.size(); ++j) out[i + j] += c * fk[i] * gk[j];
  }
  return out;
}

/// Float comparison of the q-bracket with its term-wise q -> 1 limit on
/// monomial inputs x^a, y^b with a, b <= max_degree.
struct ClassicalLimitResult {
  Report report;
  double worst_relative = 0;
};

inline ClassicalLimitResult classical_limit_check(double q0, double lambda0, double lambda0_prime, int max_n,
                                                  int max_degree, double tolerance, bool poison = false) {
  ClassicalLimitResult out;
  Checker c("classical-limit");
  c.param("max_n", max_n).param("max_degree", max_degree);
  c.param("q0", coeff_string(q0)).param("tolerance", coeff_string(tolerance));
  const auto F = float_params(q0, lambda0, lambda0_prime);
  for (int n = 0; n <= max_n; ++n)
    for (int a = 0; a <= max_degree; ++a)
      for (int b = 0; b <= max_degree; ++b) {
        std::vector<double> f(static_cast<std::size_t>(a) + 1, 0.0);
        std::vector<double> g(static_cast<std::size_t>(b) + 1, 0.0);
        f.back() = 1;
        g.back() = 1;
        const auto classical = classical_rc(n, lambda0, lambda0_prime, f, g);
        const auto r = qrc(F, n, OnePoly<double>::monomial(a), OnePoly<double>::monomial(b));
        for (std::size_t m = 0; m < classical.size(); ++m) {
          double got = r.coeff(static_cast<int>(m));
          if (poison) {
            got = poisoned(got);
            poison = false;
          }
          const double want = classical[m];
          const double err = want == 0 ? std::abs(got) : std::abs(got - want) / std::abs(want);
          out.worst_relative = std::max(out.worst_relative, err);
          if (err > tolerance)
            c.fail("n=" + std::to_string(n) + " f=x^" + std::to_string(a) + " g=y^" + std::to_string(b) +
                   " coefficient of z^" + std::to_string(m) + ": q-bracket " + coeff_string(got) +
                   ", classical " + coeff_string(want) + ", relative error " + coeff_string(err));
        }
      }
  c.param("worst_relative", coeff_string(out.worst_relative));
  out.report = c.report();
  return out;
}

}  // namespace qsym
