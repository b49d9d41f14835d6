// Copyright (c) 2026 The slh-netsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "slh/components.hpp"
#include "slh/reduction.hpp"
#include "slh/types.hpp"

namespace slh {

// Upper blocks of the doubled-up frequency response
//   Xi(w) = D + C (-iw I - A)^{-1} B
// evaluated at angular frequency w: out(w) = s_minus in(w) + s_plus in^dag(-w).
// The lower blocks of Xi(w) are the conjugates of these evaluated at -w.
struct TransferBlocks {
  Matrix s_minus;
  Matrix s_plus;
  double omega = 0.0;
};

// Throws ResonanceError when -iw is too close to an eigenvalue of A
// (resolvent condition estimate above 1e12).
TransferBlocks transfer_function(const DoubledUpSystem& sys, double omega);

// Full 2m x 2m response matrix; satisfies Xi J Xi^dag = J.
Matrix transfer_matrix(const DoubledUpSystem& sys, double omega);

// Mean output amplitude per port for static coherent drive w (m entries):
//   v = s_minus(0) w + s_plus(0) conj(w).
// Requires a Hurwitz-stable system.
Vector dc_output_amplitude(const DoubledUpSystem& sys, const Vector& input_amplitudes);

// Homodyne power spectral density of one output quadrature, normalised so
// vacuum is exactly 1.  For output port j at quadrature angle theta,
//
//   P(w) = 1 + N_j(w) + N_j(-w) + e^{2i theta} M_j(w) + conj(e^{2i theta} M_j(-w))
//   N_j(w) = sum_k |s_plus_jk(w)|^2
//   M_j(w) = sum_k s_minus_jk(w) s_plus_jk(-w)
//
// The two M terms are conjugate up to round-off, so P is real; evaluation
// enforces |Im P| <= 1e-10 and P > 0.  A nonzero coherent drive does not
// change the sampled curve; it adds a dc line whose weight is reported
// separately as 4 Re(e^{i theta} v_j)^2 alongside v_j itself.
struct SpectrumResult {
  RealVector frequencies_hz;
  RealVector values;      // P, linear, vacuum = 1
  RealVector values_db;   // 10 log10 P
  Index port = 0;
  double theta = 0.0;
  Complex dc_amplitude = 0.0;
  double dc_delta_weight = 0.0;
};

SpectrumResult squeezing_spectrum(const DoubledUpSystem& sys, Index port, double theta,
                                  const RealVector& grid_hz,
                                  const Vector& input_amplitudes = Vector());

// Steady-state second moments of the mode fluctuations in the doubled-up
// basis, from A X + X A^dag + Q = 0 with Q = dup-block diag(C_-^dag C_-, 0).
// Solved directly by Kronecker vectorisation (the state space is small).
struct CovarianceResult {
  Matrix delta_n;      // 2n x 2n, Hermitian, PSD
  double residual = 0.0;  // ||A X + X A^dag + Q||_max
};

CovarianceResult steady_state_covariance(const DoubledUpSystem& sys);

// Steady-state photon flux leaving port j: a coherent part |v_j|^2 from the
// drive plus the normally ordered fluctuation flux (C deltaN C^dag at the
// conjugate-block diagonal).  Both contributions are reported.
struct PortPower {
  double total = 0.0;
  double coherent = 0.0;
  double fluctuation = 0.0;
};

PortPower steady_state_power(const DoubledUpSystem& sys, const Vector& input_amplitudes,
                             Index port);

// Steady-state power at `port` as the feedback phase sweeps phi_grid.
// Unstable phases are flagged and skipped; phi_star is the stable phase of
// minimum power.  Throws ScanError when no phase is stable.
struct PhaseScanResult {
  RealVector phis;
  RealVector powers;          // NaN where unstable
  std::vector<bool> stable;
  double phi_star = 0.0;
  Index argmin = 0;
};

PhaseScanResult phase_scan(const NetworkParams& params, Index port,
                           const RealVector& phi_grid);

// Per-x stability of the network as the plant pump sweeps x_grid.
struct StabilityScanResult {
  RealVector xs;
  RealVector max_real_parts;
  std::vector<bool> hurwitz;
};

StabilityScanResult stability_scan(const NetworkParams& params, const RealVector& x_grid);

// Smallest pump strength x at which the network loses Hurwitz stability,
// found by bisection to absolute tolerance tol.  x_lo must be stable; the
// upper bracket is doubled as needed until instability is found.
double instability_threshold(const NetworkParams& params, double x_lo, double x_hi,
                             double tol = 1e-6);

}  // namespace slh
