// Copyright (c) 2026 The slh-netsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "slh/types.hpp"

namespace slh {

// Quadratic Hamiltonian on n modes, split into a particle-conserving part
// and a pair-creation (pump) part:
//
//   H = sum_ij omega_ij a_i^dag a_j
//     + (1/2i) sum_ij (conj(pump_ij) a_i a_j - pump_ij a_i^dag a_j^dag)
//
// omega must be Hermitian and pump symmetric; both are enforced on
// construction so composed Hamiltonians stay physical.
class QuadraticHamiltonian {
 public:
  QuadraticHamiltonian(Matrix omega, Matrix pump);

  static QuadraticHamiltonian zero(Index n_modes);

  const Matrix& omega() const { return omega_; }
  const Matrix& pump() const { return pump_; }
  Index modes() const { return omega_.rows(); }

 private:
  Matrix omega_;
  Matrix pump_;
};

QuadraticHamiltonian operator+(const QuadraticHamiltonian& a, const QuadraticHamiltonian& b);

}  // namespace slh
