// Copyright (c) 2026 The slh-netsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "slh/types.hpp"

#include "slh/errors.hpp"

namespace slh {

Matrix dup_metric(Index k) {
  Matrix j = Matrix::Zero(2 * k, 2 * k);
  j.topLeftCorner(k, k) = Matrix::Identity(k, k);
  j.bottomRightCorner(k, k) = -Matrix::Identity(k, k);
  return j;
}

Matrix doubled_up(const Matrix& x, const Matrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw ParameterError("doubled_up: block shapes differ");
  }
  Matrix out(2 * x.rows(), 2 * x.cols());
  out.topLeftCorner(x.rows(), x.cols()) = x;
  out.topRightCorner(x.rows(), x.cols()) = y;
  out.bottomLeftCorner(x.rows(), x.cols()) = y.conjugate();
  out.bottomRightCorner(x.rows(), x.cols()) = x.conjugate();
  return out;
}

double max_abs(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m - m.adjoint()) <= tol;
}

bool is_symmetric(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m - m.transpose()) <= tol;
}

bool is_unitary(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const Matrix gram = m * m.adjoint();
  return max_abs(gram - Matrix::Identity(m.rows(), m.cols())) <= tol;
}

RealVector linspace(double lo, double hi, Index n) {
  if (n <= 0) throw ParameterError("linspace: need at least one sample");
  RealVector v(n);
  if (n == 1) {
    v(0) = lo;
    return v;
  }
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (Index i = 0; i < n; ++i) v(i) = lo + step * static_cast<double>(i);
  v(n - 1) = hi;
  return v;
}

}  // namespace slh
