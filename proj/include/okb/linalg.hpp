// Exact dense linear algebra over a field scalar (Rational in practice).
//
// Everything here is plain Gaussian elimination; no tolerance is involved,
// so the templates must only be instantiated with exact scalars.
#pragma once

#include "okb/error.hpp"
#include "okb/rational.hpp"

#include <stdexcept>
#include <string>

namespace okb {

/// Solves a * x = rhs for every column of rhs. Throws MathError
/// (kSingularSystem) when a is singular.
template <typename Scalar>
Matrix<Scalar> solve_linear(const Matrix<Scalar>& a, const Matrix<Scalar>& rhs) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("solve_linear: matrix is not square");
  if (rhs.rows() != n) throw std::invalid_argument("solve_linear: rhs has wrong length");

  Matrix<Scalar> m = a;
  Matrix<Scalar> x = rhs;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) throw MathError(MathErrorKind::kSingularSystem, "singular system");
    if (pivot != col) {
      m.row(col).swap(m.row(pivot));
      x.row(col).swap(x.row(pivot));
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || m(r, col) == 0) continue;
      const Scalar f = m(r, col) / m(col, col);
      m.row(r) -= f * m.row(col);
      x.row(r) -= f * x.row(col);
    }
  }
  for (Eigen::Index r = 0; r < n; ++r) x.row(r) /= m(r, r);
  return x;
}

template <typename Scalar>
Vector<Scalar> solve_linear(const Matrix<Scalar>& a, const Vector<Scalar>& rhs) {
  return solve_linear<Scalar>(a, Matrix<Scalar>(rhs)).col(0);
}

template <typename Scalar>
bool is_symmetric(const Matrix<Scalar>& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

/// Sylvester's criterion: (-1)^k * det(leading k x k minor) > 0 for all k.
/// Elimination without row exchanges produces pivots p_k = det_k / det_{k-1},
/// so the criterion is equivalent to every pivot being strictly negative.
template <typename Scalar>
bool is_negative_definite(const Matrix<Scalar>& gram) {
  if (!is_symmetric(gram)) throw std::invalid_argument("is_negative_definite: matrix is not symmetric");
  Matrix<Scalar> m = gram;
  const Eigen::Index n = m.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    if (!(m(k, k) < 0)) return false;
    for (Eigen::Index r = k + 1; r < n; ++r) {
      if (m(r, k) == 0) continue;
      const Scalar f = m(r, k) / m(k, k);
      m.row(r).tail(n - k) -= f * m.row(k).tail(n - k);
    }
  }
  return true;
}

template <typename Scalar>
Scalar determinant(const Matrix<Scalar>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix is not square");
  Matrix<Scalar> m = a;
  const Eigen::Index n = m.rows();
  Scalar det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != col) {
      m.row(col).swap(m.row(pivot));
      det = -det;
    }
    det *= m(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      const Scalar f = m(r, col) / m(col, col);
      m.row(r) -= f * m.row(col);
    }
  }
  return det;
}

}  // namespace okb
