// Copyright (c) 2026 The slh-netsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "slh/analysis.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>
#include <unsupported/Eigen/KroneckerProduct>

#include "slh/errors.hpp"

namespace slh {

namespace {

constexpr double kSpectrumImagTol = 1e-10;
constexpr double kRcondFloor = 1e-12;

void require_hurwitz(const DoubledUpSystem& sys, const char* who) {
  const StabilityReport report = stability(sys);
  if (!report.is_hurwitz) {
    throw StabilityError(std::string(who) + ": system is not Hurwitz stable (max Re lambda = " +
                         std::to_string(report.max_real_part) + ")");
  }
}

}  // namespace

TransferBlocks transfer_function(const DoubledUpSystem& sys, double omega) {
  const Index two_n = sys.a.rows();
  const Matrix resolvent_arg =
      -kI * omega * Matrix::Identity(two_n, two_n) - sys.a;
  const Eigen::PartialPivLU<Matrix> lu(resolvent_arg);
  if (lu.rcond() < kRcondFloor) {
    throw ResonanceError("transfer_function: -i*omega is within numerical range of an "
                         "eigenvalue of the dynamics matrix (rcond = " +
                             std::to_string(lu.rcond()) + ")",
                         omega);
  }
  const Matrix xi = sys.d + sys.c * lu.solve(sys.b);
  const Index m = sys.n_ports;
  TransferBlocks blocks;
  blocks.s_minus = xi.topLeftCorner(m, m);
  blocks.s_plus = xi.topRightCorner(m, m);
  blocks.omega = omega;
  return blocks;
}

Matrix transfer_matrix(const DoubledUpSystem& sys, double omega) {
  const TransferBlocks fwd = transfer_function(sys, omega);
  const TransferBlocks bwd = transfer_function(sys, -omega);
  const Index m = sys.n_ports;
  Matrix xi(2 * m, 2 * m);
  xi.topLeftCorner(m, m) = fwd.s_minus;
  xi.topRightCorner(m, m) = fwd.s_plus;
  xi.bottomLeftCorner(m, m) = bwd.s_plus.conjugate();
  xi.bottomRightCorner(m, m) = bwd.s_minus.conjugate();
  return xi;
}

Vector dc_output_amplitude(const DoubledUpSystem& sys, const Vector& input_amplitudes) {
  if (input_amplitudes.size() != sys.n_ports) {
    throw ParameterError("dc_output_amplitude: expected " + std::to_string(sys.n_ports) +
                         " input amplitudes, got " + std::to_string(input_amplitudes.size()));
  }
  require_hurwitz(sys, "dc_output_amplitude");
  const TransferBlocks dc = transfer_function(sys, 0.0);
  return dc.s_minus * input_amplitudes + dc.s_plus * input_amplitudes.conjugate();
}

SpectrumResult squeezing_spectrum(const DoubledUpSystem& sys, Index port, double theta,
                                  const RealVector& grid_hz, const Vector& input_amplitudes) {
  if (port < 0 || port >= sys.n_ports) {
    throw ParameterError("squeezing_spectrum: port " + std::to_string(port) +
                         " out of range for " + std::to_string(sys.n_ports) + " ports");
  }
  require_hurwitz(sys, "squeezing_spectrum");

  SpectrumResult result;
  result.frequencies_hz = grid_hz;
  result.port = port;
  result.theta = theta;
  result.values.resize(grid_hz.size());
  result.values_db.resize(grid_hz.size());

  const Complex phase = std::exp(Complex(0.0, 2.0 * theta));
  for (Index i = 0; i < grid_hz.size(); ++i) {
    const double w = 2.0 * std::numbers::pi * grid_hz(i);
    const TransferBlocks fwd = transfer_function(sys, w);
    const TransferBlocks bwd = transfer_function(sys, -w);
    const double n_fwd = fwd.s_plus.row(port).squaredNorm();
    const double n_bwd = bwd.s_plus.row(port).squaredNorm();
    const Complex m_fwd = (fwd.s_minus.row(port).array() * bwd.s_plus.row(port).array()).sum();
    const Complex m_bwd = (bwd.s_minus.row(port).array() * fwd.s_plus.row(port).array()).sum();
    const Complex p = 1.0 + n_fwd + n_bwd + phase * m_fwd + std::conj(phase * m_bwd);
    if (std::abs(p.imag()) > kSpectrumImagTol) {
      throw NumericError("squeezing_spectrum: spectrum is not real (Im P = " +
                         std::to_string(p.imag()) + " at " + std::to_string(grid_hz(i)) +
                         " Hz)");
    }
    if (p.real() <= 0.0) {
      throw NumericError("squeezing_spectrum: nonpositive spectrum (P = " +
                         std::to_string(p.real()) + " at " + std::to_string(grid_hz(i)) +
                         " Hz)");
    }
    result.values(i) = p.real();
    result.values_db(i) = 10.0 * std::log10(p.real());
  }

  if (input_amplitudes.size() > 0) {
    const Vector v = dc_output_amplitude(sys, input_amplitudes);
    result.dc_amplitude = v(port);
    const double quad = 2.0 * (std::exp(Complex(0.0, theta)) * v(port)).real();
    result.dc_delta_weight = quad * quad;
  }
  return result;
}

CovarianceResult steady_state_covariance(const DoubledUpSystem& sys) {
  require_hurwitz(sys, "steady_state_covariance");
  const Index n = sys.n_modes;
  const Index two_n = 2 * n;

  Matrix q = Matrix::Zero(two_n, two_n);
  const Matrix c_minus = sys.c_minus();
  q.topLeftCorner(n, n) = c_minus.adjoint() * c_minus;

  // Vectorised Lyapunov solve: (I (x) A + conj(A) (x) I) vec(X) = -vec(Q).
  const Matrix identity = Matrix::Identity(two_n, two_n);
  const Matrix lhs = Eigen::kroneckerProduct(identity, sys.a).eval() +
                     Eigen::kroneckerProduct(sys.a.conjugate(), identity).eval();
  const Vector rhs = -Eigen::Map<const Vector>(q.data(), q.size());
  const Eigen::PartialPivLU<Matrix> lu(lhs);
  if (lu.rcond() < kRcondFloor) {
    throw NumericError("steady_state_covariance: Lyapunov operator is numerically singular");
  }
  const Vector vec_x = lu.solve(rhs);
  Matrix x = Eigen::Map<const Matrix>(vec_x.data(), two_n, two_n);
  x = (0.5 * (x + x.adjoint())).eval();

  CovarianceResult result;
  result.residual = max_abs(sys.a * x + x * sys.a.adjoint() + q);
  result.delta_n = std::move(x);
  return result;
}

PortPower steady_state_power(const DoubledUpSystem& sys, const Vector& input_amplitudes,
                             Index port) {
  if (port < 0 || port >= sys.n_ports) {
    throw ParameterError("steady_state_power: port " + std::to_string(port) +
                         " out of range for " + std::to_string(sys.n_ports) + " ports");
  }
  const Vector v = dc_output_amplitude(sys, input_amplitudes);
  const CovarianceResult cov = steady_state_covariance(sys);
  const Matrix out_cov = sys.c * cov.delta_n * sys.c.adjoint();
  PortPower power;
  power.coherent = std::norm(v(port));
  power.fluctuation = out_cov(sys.n_ports + port, sys.n_ports + port).real();
  power.total = power.coherent + power.fluctuation;
  return power;
}

PhaseScanResult phase_scan(const NetworkParams& params, Index port,
                           const RealVector& phi_grid) {
  if (phi_grid.size() == 0) {
    throw ParameterError("phase_scan: empty phase grid");
  }
  PhaseScanResult result;
  result.phis = phi_grid;
  result.powers.resize(phi_grid.size());
  result.stable.assign(static_cast<size_t>(phi_grid.size()), false);

  double best = std::numeric_limits<double>::infinity();
  bool any_stable = false;
  for (Index i = 0; i < phi_grid.size(); ++i) {
    NetworkParams p = params;
    p.phi = phi_grid(i);
    const DoubledUpSystem sys = to_abcd(build_network(p));
    if (!stability(sys).is_hurwitz) {
      result.powers(i) = std::numeric_limits<double>::quiet_NaN();
      continue;
    }
    result.stable[static_cast<size_t>(i)] = true;
    any_stable = true;
    result.powers(i) = steady_state_power(sys, p.input_amplitudes, port).total;
    if (result.powers(i) < best) {
      best = result.powers(i);
      result.argmin = i;
      result.phi_star = phi_grid(i);
    }
  }
  if (!any_stable) {
    throw ScanError("phase_scan: network is unstable at every phase in the grid");
  }
  return result;
}

StabilityScanResult stability_scan(const NetworkParams& params, const RealVector& x_grid) {
  if (x_grid.size() == 0) {
    throw ParameterError("stability_scan: empty pump grid");
  }
  StabilityScanResult result;
  result.xs = x_grid;
  result.max_real_parts.resize(x_grid.size());
  result.hurwitz.assign(static_cast<size_t>(x_grid.size()), false);
  for (Index i = 0; i < x_grid.size(); ++i) {
    NetworkParams p = params;
    p.x = x_grid(i);
    const StabilityReport report = stability(to_abcd(build_network(p)));
    result.max_real_parts(i) = report.max_real_part;
    result.hurwitz[static_cast<size_t>(i)] = report.is_hurwitz;
  }
  return result;
}

namespace {

bool hurwitz_at(const NetworkParams& params, double x) {
  NetworkParams p = params;
  p.x = x;
  return stability(to_abcd(build_network(p))).is_hurwitz;
}

}  // namespace

double instability_threshold(const NetworkParams& params, double x_lo, double x_hi,
                             double tol) {
  if (!(x_lo < x_hi)) {
    throw ParameterError("instability_threshold: require x_lo < x_hi");
  }
  if (!hurwitz_at(params, x_lo)) {
    throw ParameterError("instability_threshold: lower bracket x = " + std::to_string(x_lo) +
                         " is already unstable");
  }
  double hi = x_hi;
  int doublings = 0;
  while (hurwitz_at(params, hi)) {
    hi = x_lo + 2.0 * (hi - x_lo);
    if (++doublings > 60) {
      throw ScanError("instability_threshold: no instability found below x = " +
                      std::to_string(hi));
    }
  }
  double lo = x_lo;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (hurwitz_at(params, mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace slh
