// Copyright (c) 2026 The slh-netsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "slh/hamiltonian.hpp"

#include "slh/errors.hpp"

namespace slh {

QuadraticHamiltonian::QuadraticHamiltonian(Matrix omega, Matrix pump)
    : omega_(std::move(omega)), pump_(std::move(pump)) {
  if (omega_.rows() != omega_.cols() || pump_.rows() != pump_.cols() ||
      omega_.rows() != pump_.rows()) {
    throw ParameterError("hamiltonian: omega and pump must be square with equal size");
  }
  if (!is_hermitian(omega_, kHermitianTol)) {
    throw ParameterError("hamiltonian: omega is not Hermitian");
  }
  if (!is_symmetric(pump_, kHermitianTol)) {
    throw ParameterError("hamiltonian: pump is not symmetric");
  }
}

QuadraticHamiltonian QuadraticHamiltonian::zero(Index n_modes) {
  return {Matrix::Zero(n_modes, n_modes), Matrix::Zero(n_modes, n_modes)};
}

QuadraticHamiltonian operator+(const QuadraticHamiltonian& a, const QuadraticHamiltonian& b) {
  return {a.omega() + b.omega(), a.pump() + b.pump()};
}

}  // namespace slh
