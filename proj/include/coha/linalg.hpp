#pragma once

#include "coha/polynomial.hpp"
#include "coha/rational.hpp"

#include <Eigen/Core>

#include <utility>
#include <vector>

namespace coha {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = DenseMatrix<Rational>;
using RationalVector = DenseVector<Rational>;
using PolynomialMatrix = DenseMatrix<Polynomial>;

/// Reduced row echelon form in place over a field; pivots are scaled to one.
/// Returns the pivot columns. Zero rows end up at the bottom.
template <class Scalar>
std::vector<Eigen::Index> rref(DenseMatrix<Scalar>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot = row;
    while (pivot < m.rows() && is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    m.row(row).swap(m.row(pivot));
    const Scalar lead = m(row, col);
    for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) = m(row, j) / lead;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const Scalar factor = m(r, col);
      for (Eigen::Index j = col; j < m.cols(); ++j) m(r, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class Scalar>
Eigen::Index rank(DenseMatrix<Scalar> m) {
  return static_cast<Eigen::Index>(rref(m).size());
}

/// Determinant by fraction-free (Bareiss) elimination. Works over any integral
/// domain that provides is_zero and exact_divide.
template <class Scalar>
Scalar bareiss_determinant(DenseMatrix<Scalar> m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return Scalar(1);
  bool negate = false;
  Scalar previous(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      Eigen::Index swap = k + 1;
      while (swap < n && is_zero(m(swap, k))) ++swap;
      if (swap == n) return Scalar(0);
      m.row(k).swap(m.row(swap));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = exact_divide(Scalar(m(i, j) * m(k, k) - m(i, k) * m(k, j)), previous);
      }
    }
    previous = m(k, k);
  }
  Scalar det = m(n - 1, n - 1);
  return negate ? Scalar(-det) : det;
}

/// Whether `v` lies in the column span of `basis` (which may have zero columns).
inline bool in_column_span(const RationalMatrix& basis, const RationalVector& v) {
  if (basis.cols() == 0) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (v(i) != 0) return false;
    }
    return true;
  }
  RationalMatrix extended(basis.rows(), basis.cols() + 1);
  extended << basis, v;
  return rank(extended) == rank(basis);
}

}  // namespace coha
