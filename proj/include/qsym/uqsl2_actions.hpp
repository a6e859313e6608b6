#pragma once

#include <map>
#include <string>
#include <vector>

#include "qsym/linalg.hpp"
#include "qsym/qspecial.hpp"

namespace qsym {

enum class Generator { K, Kinv, E, F };

inline const char* generator_name(Generator g) {
  switch (g) {
    case Generator::K:
      return "K";
    case Generator::Kinv:
      return "K^-1";
    case Generator::E:
      return "E";
    case Generator::F:
      return "F";
  }
  return "?";
}

inline const std::vector<Generator>& all_generators() {
  static const std::vector<Generator> g{Generator::K, Generator::Kinv, Generator::E, Generator::F};
  return g;
}

/// Verma module of lowest weight w on C[z]:
/// K z^n = q^{w+2n} z^n, E z^n = z^{n+1}, F z^n = -[w+n-1][n] z^{n-1}.
template <class S>
OnePoly<S> verma_act(const QParams<S>& P, Generator g, const OnePoly<S>& p,
                     WeightExpr w = WeightExpr::lambda()) {
  OnePoly<S> r;
  for (const auto& [n, c] : p.terms()) {
    switch (g) {
      case Generator::K:
        r.add_term(n, P.power(w + 2 * n) * c);
        break;
      case Generator::Kinv:
        r.add_term(n, P.power(-(w + 2 * n)) * c);
        break;
      case Generator::E:
        r.add_term(n + 1, c);
        break;
      case Generator::F:
        if (n > 0) r.add_term(n - 1, -(qnum(P, w + (n - 1)) * qnum(P, WeightExpr::integer(n))) * c);
        break;
    }
  }
  return r;
}

/// C = (q - q^{-1})^2 F E + q K + q^{-1} K^{-1} in the Verma module.
template <class S>
OnePoly<S> verma_casimir(const QParams<S>& P, const OnePoly<S>& p, WeightExpr w = WeightExpr::lambda()) {
  const S qq = P.q() - S(1) / P.q();
  return (qq * qq) * verma_act(P, Generator::F, verma_act(P, Generator::E, p, w), w) +
         P.q() * verma_act(P, Generator::K, p, w) + (S(1) / P.q()) * verma_act(P, Generator::Kinv, p, w);
}

/// Coproduct action on V_lambda (x) V_lambda' realized on the quantum plane.
template <class S>
QPlanePoly<S> tensor_act(const QParams<S>& P, Generator g, const QPlanePoly<S>& p) {
  const WeightExpr mu{1, 1, 0};
  QPlanePoly<S> r;
  for (const auto& [key, c] : p.terms()) {
    const auto [k, l] = key;
    switch (g) {
      case Generator::K:
        r.add_term(k, l, P.power(mu + 2 * (k + l)) * c);
        break;
      case Generator::Kinv:
        r.add_term(k, l, P.power(-(mu + 2 * (k + l))) * c);
        break;
      case Generator::E:
        r.add_term(k + 1, l, c);
        r.add_term(k, l + 1, P.power(WeightExpr::lambda() + 2 * k) * c);
        break;
      case Generator::F:
        if (k > 0)
          r.add_term(k - 1, l,
                     -(P.power(-(WeightExpr::lambda_prime() + 2 * l)) *
                       qnum(P, WeightExpr::lambda() + (k - 1)) * qnum(P, WeightExpr::integer(k))) *
                         c);
        if (l > 0)
          r.add_term(k, l - 1,
                     -(qnum(P, WeightExpr::lambda_prime() + (l - 1)) * qnum(P, WeightExpr::integer(l))) * c);
        break;
    }
  }
  return r;
}

/// Delta(C) on the quantum plane, from the Casimir expression and the
/// coproduct actions.
template <class S>
QPlanePoly<S> casimir_tensor(const QParams<S>& P, const QPlanePoly<S>& p) {
  const S qq = P.q() - S(1) / P.q();
  return (qq * qq) * tensor_act(P, Generator::F, tensor_act(P, Generator::E, p)) +
         P.q() * tensor_act(P, Generator::K, p) + (S(1) / P.q()) * tensor_act(P, Generator::Kinv, p);
}

namespace detail {
struct FreeTXTag {
  static constexpr const char* first = "t";
  static constexpr const char* second = "X";
  static constexpr bool restrict_tx = false;
};
}  // namespace detail

/// Coproduct action in the commuting (t, X) picture:
/// K P = q^{lambda+lambda'} P(q^2 t, X), E P = t P, and
/// F P = -(q^{mu-1}(P(q^2t) - P(t)) - q^{1-mu}(P(t) - P(q^{-2}t))) / ((q-q^{-1})^2 t) + Theta_X P / t
/// with mu = lambda + lambda'. The t-part quotient on t^i equals -[mu+i-1][i] t^{i-1}.
template <class S>
TXPoly<S> tx_act(const QParams<S>& P, Generator g, const TXPoly<S>& p) {
  const WeightExpr mu{1, 1, 0};
  TXPoly<S> r;
  switch (g) {
    case Generator::K:
    case Generator::Kinv:
      for (const auto& [key, c] : p.terms()) {
        const S w = P.power(mu + 2 * key.first);
        r.add_term(key.first, key.second, (g == Generator::K ? w : S(1) / w) * c);
      }
      return r;
    case Generator::E:
      for (const auto& [key, c] : p.terms()) r.add_term(key.first + 1, key.second, c);
      return r;
    case Generator::F:
      break;
  }
  // group by t-degree, apply both parts in an unrestricted scratch polynomial
  std::map<int, XPoly<S>> slices;
  for (const auto& [key, c] : p.terms()) slices[key.first].add_term(key.second, c);
  Poly2<S, detail::FreeTXTag> scratch;
  for (const auto& [i, f] : slices) {
    const S tpart = -(qnum(P, mu + (i - 1)) * qnum(P, WeightExpr::integer(i)));
    const XPoly<S> th = theta_apply(P, f);
    if (i == 0) {
      if (!th.is_zero()) throw std::logic_error("tx_act: Theta of a t^0 slice must vanish");
      continue;
    }
    for (const auto& [j, c] : f.terms()) scratch.add_term(i - 1, j, tpart * c);
    for (const auto& [j, c] : th.terms()) scratch.add_term(i - 1, j, c);
  }
  for (const auto& [key, c] : scratch.terms()) r.add_term(key.first, key.second, c);
  return r;
}

/// Delta(C) in the (t, X) picture: (q - q^{-1})^2 Theta_X + q^{mu-1} + q^{1-mu}.
template <class S>
TXPoly<S> casimir_tensor_tx(const QParams<S>& P, const TXPoly<S>& p) {
  const WeightExpr mu{1, 1, 0};
  const S qq = P.q() - S(1) / P.q();
  const S shift = P.power(mu - 1) + P.power(-(mu - 1));
  std::map<int, XPoly<S>> slices;
  for (const auto& [key, c] : p.terms()) slices[key.first].add_term(key.second, c);
  TXPoly<S> r = shift * p;
  for (const auto& [i, f] : slices) {
    const XPoly<S> th = theta_apply(P, f);
    for (const auto& [j, c] : th.terms()) r.add_term(i, j, qq * qq * c);
  }
  return r;
}

/// Contragredient (dual) action at weight w:
/// K z^n = q^{-w-2n} z^n, E z^n = -[n] q^{-w-n-1} z^{n-1}, F z^n = [w+n] q^{w+n+2} z^{n+1}.
template <class S>
OnePoly<S> contragredient_act(const QParams<S>& P, Generator g, const OnePoly<S>& p,
                              WeightExpr w = WeightExpr::lambda()) {
  OnePoly<S> r;
  for (const auto& [n, c] : p.terms()) {
    switch (g) {
      case Generator::K:
        r.add_term(n, P.power(-(w + 2 * n)) * c);
        break;
      case Generator::Kinv:
        r.add_term(n, P.power(w + 2 * n) * c);
        break;
      case Generator::E:
        if (n > 0) r.add_term(n - 1, -(qnum(P, WeightExpr::integer(n)) * P.power(-(w + (n + 1)))) * c);
        break;
      case Generator::F:
        r.add_term(n + 1, qnum(P, w + n) * P.power(w + (n + 2)) * c);
        break;
    }
  }
  return r;
}

/// <z^n, z^n> = q^{n(n-1)/2} [n]!.
template <class S>
S fischer_norm(const QParams<S>& P, int n) {
  return P.qpow(n * (n - 1) / 2) * qfact(P, n);
}

template <class S>
S fischer_inner(const QParams<S>& P, const OnePoly<S>& a, const OnePoly<S>& b) {
  S r(0);
  for (const auto& [n, c] : a.terms()) {
    const S d = b.coeff(n);
    if (!is_zero(d)) r = r + c * d * fischer_norm(P, n);
  }
  return r;
}

template <class S>
S fischer_inner_tensor(const QParams<S>& P, const QPlanePoly<S>& a, const QPlanePoly<S>& b) {
  S r(0);
  for (const auto& [key, c] : a.terms()) {
    const S d = b.coeff(key.first, key.second);
    if (!is_zero(d)) r = r + c * d * fischer_norm(P, key.first) * fischer_norm(P, key.second);
  }
  return r;
}

/// Finite bases: degree <= D for C[z], total degree <= D for the plane,
/// t-degree <= D for C[t, tX].
template <class Poly>
struct BasisTraits;

template <class S, class Var>
struct BasisTraits<Poly1<S, Var>> {
  using Key = int;
  static std::vector<Key> keys(int D) {
    std::vector<Key> k;
    for (int n = 0; n <= D; ++n) k.push_back(n);
    return k;
  }
  static Poly1<S, Var> element(Key n) { return Poly1<S, Var>::monomial(n); }
  static std::string label(Key n) { return std::string(Var::name) + "^" + std::to_string(n); }
};

template <class S, class Tag>
struct BasisTraits<Poly2<S, Tag>> {
  using Key = std::pair<int, int>;
  static std::vector<Key> keys(int D) {
    std::vector<Key> k;
    for (int d = 0; d <= D; ++d) {
      if (Tag::restrict_tx) {
        for (int j = 0; j <= d; ++j) k.emplace_back(d, j);
      } else {
        for (int a = d; a >= 0; --a) k.emplace_back(a, d - a);
      }
    }
    return k;
  }
  static Poly2<S, Tag> element(const Key& k) { return Poly2<S, Tag>::monomial(k.first, k.second); }
  static std::string label(const Key& k) {
    return std::string(Tag::first) + "^" + std::to_string(k.first) + " " + Tag::second + "^" +
           std::to_string(k.second);
  }
};

template <class Poly>
std::vector<std::string> basis_labels(int D) {
  std::vector<std::string> out;
  for (const auto& k : BasisTraits<Poly>::keys(D)) out.push_back(BasisTraits<Poly>::label(k));
  return out;
}

namespace detail {
template <class S, class Var, class Fn>
void for_each_term(const Poly1<S, Var>& p, Fn&& f) {
  for (const auto& [n, c] : p.terms()) f(n, c);
}
template <class S, class Tag, class Fn>
void for_each_term(const Poly2<S, Tag>& p, Fn&& f) {
  for (const auto& [k, c] : p.terms()) f(k, c);
}
}  // namespace detail

/// Matrix of a linear map restricted to the domain truncation, with images
/// expressed in the codomain truncation. Raises TruncationLeak if an image
/// leaves the codomain truncation.
template <class Dom, class Cod, class Fn>
OpMatrix<typename Dom::coeff_type> truncate_operator(Fn&& act, int dom_degree, int cod_degree) {
  using S = typename Dom::coeff_type;
  using DT = BasisTraits<Dom>;
  using CT = BasisTraits<Cod>;
  const auto dom = DT::keys(dom_degree);
  const auto cod = CT::keys(cod_degree);
  std::map<typename CT::Key, Eigen::Index> row;
  for (std::size_t i = 0; i < cod.size(); ++i) row[cod[i]] = static_cast<Eigen::Index>(i);
  OpMatrix<S> out{basis_labels<Cod>(cod_degree), basis_labels<Dom>(dom_degree),
                  zero_matrix<S>(static_cast<Eigen::Index>(cod.size()), static_cast<Eigen::Index>(dom.size()))};
  for (std::size_t j = 0; j < dom.size(); ++j) {
    const Cod img = act(DT::element(dom[j]));
    detail::for_each_term(img, [&](const typename CT::Key& k, const S& c) {
      auto it = row.find(k);
      if (it == row.end())
        throw TruncationLeak("image of " + DT::label(dom[j]) + " contains " + CT::label(k) +
                             " outside the truncation");
      out.m(it->second, static_cast<Eigen::Index>(j)) = c;
    });
  }
  return out;
}

/// Diagonal Fischer Gram entries in basis order.
template <class S>
std::vector<S> fischer_gram_one(const QParams<S>& P, int D) {
  std::vector<S> g;
  for (int n = 0; n <= D; ++n) g.push_back(fischer_norm(P, n));
  return g;
}

template <class S>
std::vector<S> fischer_gram_plane(const QParams<S>& P, int D) {
  std::vector<S> g;
  for (const auto& [a, b] : BasisTraits<QPlanePoly<S>>::keys(D))
    g.push_back(fischer_norm(P, a) * fischer_norm(P, b));
  return g;
}

/// Defining relations checked on each basis vector of a truncation:
/// K E K^{-1} = q^2 E, K F K^{-1} = q^{-2} F, [E, F] = (K - K^{-1})/(q - q^{-1}),
/// K K^{-1} = 1.
template <class S, class Poly, class Act>
void relations_hold(Checker& c, const QParams<S>& P, Act&& act, int D) {
  const S q2 = P.qpow(2);
  const S qm2 = P.qpow(-2);
  const S qq = P.q() - S(1) / P.q();
  for (const auto& key : BasisTraits<Poly>::keys(D)) {
    const Poly b = BasisTraits<Poly>::element(key);
    const std::string at = " on " + BasisTraits<Poly>::label(key);
    const auto K = [&](const Poly& p) { return act(Generator::K, p); };
    const auto Ki = [&](const Poly& p) { return act(Generator::Kinv, p); };
    const auto E = [&](const Poly& p) { return act(Generator::E, p); };
    const auto F = [&](const Poly& p) { return act(Generator::F, p); };
    if (!c.equal(K(E(Ki(b))), q2 * E(b), "K E K^-1 = q^2 E" + at)) return;
    if (!c.equal(K(F(Ki(b))), qm2 * F(b), "K F K^-1 = q^-2 F" + at)) return;
    if (!c.equal(E(F(b)) - F(E(b)), (S(1) / qq) * (K(b) - Ki(b)), "[E,F] = (K-K^-1)/(q-q^-1)" + at)) return;
    if (!c.equal(K(Ki(b)), b, "K K^-1 = 1" + at)) return;
  }
}

/// Checks that the adjoint of the truncated action equals the truncated
/// expected map. The action maps degree <= d_dom into degree <= d_cod and
/// the expected map goes back.
template <class S, class Dom, class Cod, class Act, class Exp>
void adjoint_matches(Checker& c, Act&& act, Exp&& expected, int d_dom, int d_cod,
                     const std::vector<S>& gram_dom, const std::vector<S>& gram_cod, const std::string& what) {
  const auto m = truncate_operator<Dom, Cod>(act, d_dom, d_cod);
  const auto e = truncate_operator<Cod, Dom>(expected, d_cod, d_dom);
  equal_matrices(c, adjoint(m.m, gram_dom, gram_cod), e.m, what, e.rows, e.cols);
}

/// tx_act(g) = phi^{-1} o tensor_act(g) o phi on every t^i X^j with i <= max_i,
/// and likewise for the Casimir.
template <class S>
Report tx_consistency_check(const QParams<S>& P, int max_i, bool poison = false) {
  Checker c("tx-consistency", poison);
  c.param("max_i", max_i);
  for (int i = 0; i <= max_i; ++i)
    for (int j = 0; j <= i; ++j) {
      const auto b = TXPoly<S>::monomial(i, j);
      const std::string at = " on t^" + std::to_string(i) + " X^" + std::to_string(j);
      for (Generator g : all_generators())
        if (!c.equal(tx_act(P, g, b), phi_inv(P, tensor_act(P, g, phi(P, b))), generator_name(g) + at))
          return c.report();
      if (!c.equal(casimir_tensor_tx(P, b), phi_inv(P, casimir_tensor(P, phi(P, b))), "C" + at)) return c.report();
    }
  return c.report();
}

/// Defining relations for the Verma, contragredient, tensor and (t, X) actions.
template <class S>
Report relations_check(const QParams<S>& P, int D, bool poison = false) {
  Checker c("relations", poison);
  c.param("D", D);
  relations_hold<S, OnePoly<S>>(c, P, [&](Generator g, const OnePoly<S>& p) { return verma_act(P, g, p); }, D);
  relations_hold<S, OnePoly<S>>(
      c, P, [&](Generator g, const OnePoly<S>& p) { return contragredient_act(P, g, p); }, D);
  relations_hold<S, QPlanePoly<S>>(c, P, [&](Generator g, const QPlanePoly<S>& p) { return tensor_act(P, g, p); },
                                   D);
  relations_hold<S, TXPoly<S>>(c, P, [&](Generator g, const TXPoly<S>& p) { return tx_act(P, g, p); }, D);
  return c.report();
}

/// Delta(C) commutes with Delta(K), Delta(E), Delta(F) on plane monomials of degree <= D.
template <class S>
Report casimir_centrality_check(const QParams<S>& P, int D, bool poison = false) {
  Checker c("casimir-centrality", poison);
  c.param("D", D);
  for (const auto& key : BasisTraits<QPlanePoly<S>>::keys(D)) {
    const auto b = QPlanePoly<S>::monomial(key.first, key.second);
    for (Generator g : all_generators())
      if (!c.equal(casimir_tensor(P, tensor_act(P, g, b)), tensor_act(P, g, casimir_tensor(P, b)),
                   std::string("C ") + generator_name(g) + " on " + BasisTraits<QPlanePoly<S>>::label(key)))
        return c.report();
  }
  return c.report();
}

/// ev: z^n -> (x + q^lambda y)^n.
template <class S>
QPlanePoly<S> ev_map(const QParams<S>& P, const OnePoly<S>& p) {
  QPlanePoly<S> r;
  for (const auto& [n, c] : p.terms()) r += c * qp_pow_linear(P, P.u(), n);
  return r;
}

/// ev^dagger: x^a y^b -> q^{b lambda} z^{a+b}.
template <class S>
OnePoly<S> ev_adjoint(const QParams<S>& P, const QPlanePoly<S>& p) {
  OnePoly<S> r;
  for (const auto& [k, c] : p.terms()) r.add_term(k.first + k.second, P.power(k.second * WeightExpr::lambda()) * c);
  return r;
}

/// Right multiplication by x and by y.
template <class S>
QPlanePoly<S> rx_map(const QParams<S>& P, const QPlanePoly<S>& p) {
  return qp_mul(P, p, QPlanePoly<S>::monomial(1, 0));
}
template <class S>
QPlanePoly<S> ry_map(const QParams<S>& P, const QPlanePoly<S>& p) {
  return qp_mul(P, p, QPlanePoly<S>::monomial(0, 1));
}

/// r_x^dagger: x^n y^m -> q^{2m+n-1}[n] x^{n-1} y^m.
template <class S>
QPlanePoly<S> rx_adjoint(const QParams<S>& P, const QPlanePoly<S>& p) {
  QPlanePoly<S> r;
  for (const auto& [k, c] : p.terms()) {
    const auto [n, m] = k;
    if (n > 0) r.add_term(n - 1, m, P.qpow(2 * m + n - 1) * qnum(P, WeightExpr::integer(n)) * c);
  }
  return r;
}

/// r_y^dagger: x^n y^m -> q^{m-1}[m] x^n y^{m-1}.
template <class S>
QPlanePoly<S> ry_adjoint(const QParams<S>& P, const QPlanePoly<S>& p) {
  QPlanePoly<S> r;
  for (const auto& [k, c] : p.terms()) {
    const auto [n, m] = k;
    if (m > 0) r.add_term(n, m - 1, P.qpow(m - 1) * qnum(P, WeightExpr::integer(m)) * c);
  }
  return r;
}

/// Fischer adjoints on truncations of degree <= D: D_{q^2} and m(z) are
/// mutually adjoint; ev, r_x, r_y against their closed-form adjoints;
/// contragredient action = verma_act(S(g))^dagger with
/// S(K) = K^{-1}, S(E) = -K^{-1}E, S(F) = -FK.
template <class S>
Report adjoint_check(const QParams<S>& P, int D, bool poison = false) {
  using Z = OnePoly<S>;
  using Plane = QPlanePoly<S>;
  Checker c("adjoints", poison);
  c.param("D", D);
  const auto g1 = fischer_gram_one(P, D);
  const auto g1m = fischer_gram_one(P, D - 1);
  const auto gp = fischer_gram_plane(P, D);
  const auto gpm = fischer_gram_plane(P, D - 1);
  auto mz = [](const Z& p) { return Z::monomial(1) * p; };
  auto dq = [&](const Z& p) { return dq_deriv(P, DerivStep::QSquared, p); };
  adjoint_matches<S, Z, Z>(c, mz, dq, D - 1, D, g1m, g1, "m(z)^dagger = D_q2");
  adjoint_matches<S, Z, Z>(c, dq, mz, D, D - 1, g1, g1m, "D_q2^dagger = m(z)");
  adjoint_matches<S, Z, Plane>(c, [&](const Z& p) { return ev_map(P, p); },
                               [&](const Plane& p) { return ev_adjoint(P, p); }, D, D, g1, gp, "ev^dagger");
  adjoint_matches<S, Plane, Plane>(c, [&](const Plane& p) { return rx_map(P, p); },
                                   [&](const Plane& p) { return rx_adjoint(P, p); }, D - 1, D, gpm, gp, "r_x^dagger");
  adjoint_matches<S, Plane, Plane>(c, [&](const Plane& p) { return ry_map(P, p); },
                                   [&](const Plane& p) { return ry_adjoint(P, p); }, D - 1, D, gpm, gp, "r_y^dagger");
  auto vK = [&](const Z& p) { return verma_act(P, Generator::Kinv, p); };
  auto vE = [&](const Z& p) { return S(-1) * verma_act(P, Generator::Kinv, verma_act(P, Generator::E, p)); };
  auto vF = [&](const Z& p) { return S(-1) * verma_act(P, Generator::F, verma_act(P, Generator::K, p)); };
  auto cK = [&](const Z& p) { return contragredient_act(P, Generator::K, p); };
  auto cE = [&](const Z& p) { return contragredient_act(P, Generator::E, p); };
  auto cF = [&](const Z& p) { return contragredient_act(P, Generator::F, p); };
  adjoint_matches<S, Z, Z>(c, vK, cK, D, D, g1, g1, "contragredient K");
  adjoint_matches<S, Z, Z>(c, vE, cE, D - 1, D, g1m, g1, "contragredient E");
  adjoint_matches<S, Z, Z>(c, vF, cF, D, D - 1, g1, g1m, "contragredient F");
  return c.report();
}

}  // namespace qsym
