#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsym/check.hpp"

namespace Eigen {

template <>
struct NumTraits<qsym::Scalar> : GenericNumTraits<qsym::Scalar> {
  using Real = qsym::Scalar;
  using NonInteger = qsym::Scalar;
  using Literal = qsym::Scalar;
  using Nested = qsym::Scalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 20,
    MulCost = 20
  };
  static constexpr int digits10() { return 0; }
  static constexpr int max_digits10() { return 0; }
};

template <>
struct NumTraits<qsym::PointValue> : GenericNumTraits<qsym::PointValue> {
  using Real = qsym::PointValue;
  using NonInteger = qsym::PointValue;
  using Literal = qsym::PointValue;
  using Nested = qsym::PointValue;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 5,
    MulCost = 5
  };
  static constexpr int digits10() { return 0; }
  static constexpr int max_digits10() { return 0; }
};

}  // namespace Eigen

namespace qsym {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

/// An action maps a basis vector outside the truncation that was required
/// to be closed under it.
class TruncationLeak : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A family of vectors expected to be a basis is linearly dependent.
class SingularBasis : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix of a linear map between two labelled finite bases.
template <class S>
struct OpMatrix {
  std::vector<std::string> rows;
  std::vector<std::string> cols;
  Mat<S> m;
};

template <class S>
Mat<S> zero_matrix(Eigen::Index r, Eigen::Index c) {
  return Mat<S>::Constant(r, c, S(0));
}

template <class S>
Mat<S> identity_matrix(Eigen::Index n) {
  Mat<S> m = zero_matrix<S>(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = S(1);
  return m;
}

/// Plain triple-loop product; skips zero entries, which dominate the
/// graded operators built here.
template <class S>
Mat<S> mat_mul(const Mat<S>& a, const Mat<S>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
  Mat<S> r = zero_matrix<S>(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j) {
        if (is_zero(b(k, j))) continue;
        r(i, j) = r(i, j) + a(i, k) * b(k, j);
      }
    }
  return r;
}

template <class S>
Mat<S> mat_scale(const S& c, const Mat<S>& a) {
  Mat<S> r = a;
  for (Eigen::Index i = 0; i < r.rows(); ++i)
    for (Eigen::Index j = 0; j < r.cols(); ++j)
      if (!is_zero(r(i, j))) r(i, j) = c * r(i, j);
  return r;
}

/// Adjoint with respect to diagonal Gram matrices on domain and codomain:
/// the matrix A with <M a, b>_cod = <a, A b>_dom, i.e. A = G_dom^{-1} M^T G_cod.
template <class S>
Mat<S> adjoint(const Mat<S>& m, const std::vector<S>& gram_dom, const std::vector<S>& gram_cod) {
  if (static_cast<std::size_t>(m.cols()) != gram_dom.size() ||
      static_cast<std::size_t>(m.rows()) != gram_cod.size())
    throw std::invalid_argument("adjoint: Gram size mismatch");
  Mat<S> r = zero_matrix<S>(m.cols(), m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (is_zero(m(i, j))) continue;
      r(j, i) = m(i, j) * gram_cod[static_cast<std::size_t>(i)] / gram_dom[static_cast<std::size_t>(j)];
    }
  return r;
}

template <class S>
OpMatrix<S> adjoint(const OpMatrix<S>& m, const std::vector<S>& gram_dom, const std::vector<S>& gram_cod) {
  return {m.cols, m.rows, adjoint(m.m, gram_dom, gram_cod)};
}

/// Rank by exact Gaussian elimination.
template <class S>
int rank(Mat<S> a) {
  int r = 0;
  const Eigen::Index rows = a.rows();
  for (Eigen::Index c = 0; c < a.cols() && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (!is_zero(a(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    a.row(piv).swap(a.row(r));
    const S inv = S(1) / a(r, c);
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      if (is_zero(a(i, c))) continue;
      const S f = a(i, c) * inv;
      for (Eigen::Index j = c; j < a.cols(); ++j)
        if (!is_zero(a(r, j))) a(i, j) = a(i, j) - f * a(r, j);
    }
    ++r;
  }
  return r;
}

/// Entrywise comparison; reports the first differing entry.
template <class S>
bool equal_matrices(Checker& c, const Mat<S>& lhs, const Mat<S>& rhs, const std::string& where,
                    const std::vector<std::string>& row_labels = {},
                    const std::vector<std::string>& col_labels = {}) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) return c.require(false, where + ": shape mismatch");
  for (Eigen::Index i = 0; i < lhs.rows(); ++i)
    for (Eigen::Index j = 0; j < lhs.cols(); ++j) {
      const std::string ri = row_labels.empty() ? std::to_string(i) : row_labels[static_cast<std::size_t>(i)];
      const std::string cj = col_labels.empty() ? std::to_string(j) : col_labels[static_cast<std::size_t>(j)];
      if (!c.equal(lhs(i, j), rhs(i, j), where + " entry (" + ri + ", " + cj + ")")) return false;
    }
  return true;
}

}  // namespace qsym
