// Copyright (c) 2026 The slh-netsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "slh/hamiltonian.hpp"
#include "slh/mode_registry.hpp"
#include "slh/types.hpp"

namespace slh {

// Open quantum network primitive in (S, L, H) form restricted to the linear
// regime: L = coupling * a, with `a` the vector of registry modes.  A model
// has as many input as output channels; `scattering` is m x m unitary and
// `coupling` is m x n over the registry's n modes.
class SLHModel {
 public:
  SLHModel(ModeRegistry registry, Matrix scattering, Matrix coupling,
           QuadraticHamiltonian hamiltonian);

  Index ports() const { return scattering_.rows(); }
  Index modes() const { return registry_.size(); }

  const ModeRegistry& registry() const { return registry_; }
  const Matrix& scattering() const { return scattering_; }
  const Matrix& coupling() const { return coupling_; }
  const QuadraticHamiltonian& hamiltonian() const { return hamiltonian_; }

 private:
  ModeRegistry registry_;
  Matrix scattering_;
  Matrix coupling_;
  QuadraticHamiltonian hamiltonian_;
};

}  // namespace slh
