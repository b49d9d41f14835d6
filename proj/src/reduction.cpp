// Copyright (c) 2026 The slh-netsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "slh/reduction.hpp"

#include <Eigen/Eigenvalues>

#include "slh/errors.hpp"

namespace slh {

double DoubledUpSystem::drift_realizability_residual() const {
  const Matrix jn = dup_metric(n_modes);
  const Matrix jm = dup_metric(n_ports);
  return max_abs(a * jn + jn * a.adjoint() + b * jm * b.adjoint());
}

double DoubledUpSystem::output_realizability_residual() const {
  const Matrix jn = dup_metric(n_modes);
  const Matrix jm = dup_metric(n_ports);
  return max_abs(b + jn * c.adjoint() * jm * d);
}

DoubledUpSystem to_abcd(const SLHModel& g) {
  const Matrix& lam = g.coupling();
  const Matrix& s = g.scattering();
  const Index n = g.modes();
  const Index m = g.ports();

  const Matrix a_minus = -kI * g.hamiltonian().omega() - 0.5 * (lam.adjoint() * lam);
  const Matrix b_minus = -(lam.adjoint() * s);
  const Matrix zero_nm = Matrix::Zero(n, m);
  const Matrix zero_mn = Matrix::Zero(m, n);
  const Matrix zero_mm = Matrix::Zero(m, m);

  DoubledUpSystem sys;
  sys.n_modes = n;
  sys.n_ports = m;
  sys.a = doubled_up(a_minus, g.hamiltonian().pump());
  sys.b = doubled_up(b_minus, zero_nm);
  sys.c = doubled_up(lam, zero_mn);
  sys.d = doubled_up(s, zero_mm);
  return sys;
}

StabilityReport stability(const DoubledUpSystem& sys) {
  Eigen::ComplexEigenSolver<Matrix> solver(sys.a, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw NumericError("stability: eigenvalue solver failed to converge");
  }
  StabilityReport report;
  report.eigenvalues = solver.eigenvalues();
  report.max_real_part = report.eigenvalues.real().maxCoeff();
  report.is_hurwitz = report.max_real_part < 0.0;
  return report;
}

}  // namespace slh
