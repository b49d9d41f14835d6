// Copyright (c) 2026 The slh-netsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "slh/slh_model.hpp"
#include "slh/types.hpp"

namespace slh {

// Linear state-space form of a model in the doubled-up basis
// (a_1..a_n, a_1^dag..a_n^dag) with field vector (in_1..in_m, in^dag...):
//
//   d a_breve = A a_breve dt + B dW_breve,   dOut_breve = C a_breve dt + D dW_breve
//
// A is 2n x 2n, B 2n x 2m, C 2m x 2n, D 2m x 2m, all with the block
// structure [[X, Y], [conj(Y), conj(X)]].  The blocks follow from the model:
//   A = dup(-i omega - coupling^dag coupling / 2, pump)
//   B = -dup(coupling^dag scattering, 0)
//   C = dup(coupling, 0),  D = dup(scattering, 0)
struct DoubledUpSystem {
  Index n_modes = 0;
  Index n_ports = 0;
  Matrix a, b, c, d;

  Matrix a_minus() const { return a.topLeftCorner(n_modes, n_modes); }
  Matrix a_plus() const { return a.topRightCorner(n_modes, n_modes); }
  Matrix c_minus() const { return c.topLeftCorner(n_ports, n_modes); }
  Matrix s() const { return d.topLeftCorner(n_ports, n_ports); }

  // || A J + J A^dag + B J B^dag ||_max with J the doubled-up metric.
  double drift_realizability_residual() const;
  // || B + J C^dag J D ||_max.
  double output_realizability_residual() const;
};

DoubledUpSystem to_abcd(const SLHModel& g);

struct StabilityReport {
  Vector eigenvalues;    // of the full doubled-up A
  double max_real_part = 0.0;
  bool is_hurwitz = false;
};

StabilityReport stability(const DoubledUpSystem& sys);

}  // namespace slh
