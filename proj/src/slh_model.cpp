// Copyright (c) 2026 The slh-netsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "slh/slh_model.hpp"

#include <string>

#include "slh/errors.hpp"

namespace slh {

SLHModel::SLHModel(ModeRegistry registry, Matrix scattering, Matrix coupling,
                   QuadraticHamiltonian hamiltonian)
    : registry_(std::move(registry)),
      scattering_(std::move(scattering)),
      coupling_(std::move(coupling)),
      hamiltonian_(std::move(hamiltonian)) {
  if (scattering_.rows() != scattering_.cols()) {
    throw ParameterError("model: scattering matrix must be square");
  }
  if (coupling_.rows() != scattering_.rows() || coupling_.cols() != registry_.size()) {
    throw ParameterError("model: coupling must be ports x modes, got " +
                         std::to_string(coupling_.rows()) + "x" +
                         std::to_string(coupling_.cols()) + " for " +
                         std::to_string(scattering_.rows()) + " ports over registry " +
                         registry_.describe());
  }
  if (hamiltonian_.modes() != registry_.size()) {
    throw ParameterError("model: hamiltonian size differs from registry " +
                         registry_.describe());
  }
  if (!is_unitary(scattering_, kUnitaryTol)) {
    throw ParameterError("model: scattering matrix is not unitary");
  }
}

}  // namespace slh
