// Copyright (c) 2026 The slh-netsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "slh/compose.hpp"

#include <string>

#include "slh/errors.hpp"

namespace slh {

namespace {

void require_same_registry(const SLHModel& g1, const SLHModel& g2, const char* op) {
  if (g1.registry() != g2.registry()) {
    throw CompositionError(std::string(op) + ": mode registries differ: " +
                           g1.registry().describe() + " vs " + g2.registry().describe());
  }
}

}  // namespace

SLHModel concatenate(const SLHModel& g1, const SLHModel& g2) {
  require_same_registry(g1, g2, "concatenate");
  const Index m1 = g1.ports();
  const Index m2 = g2.ports();
  const Index n = g1.modes();

  Matrix s = Matrix::Zero(m1 + m2, m1 + m2);
  s.topLeftCorner(m1, m1) = g1.scattering();
  s.bottomRightCorner(m2, m2) = g2.scattering();

  Matrix coupling(m1 + m2, n);
  coupling.topRows(m1) = g1.coupling();
  coupling.bottomRows(m2) = g2.coupling();

  return {g1.registry(), std::move(s), std::move(coupling),
          g1.hamiltonian() + g2.hamiltonian()};
}

SLHModel series(const SLHModel& g2, const SLHModel& g1) {
  require_same_registry(g2, g1, "series");
  if (g1.ports() != g2.ports()) {
    throw CompositionError("series: port counts differ: " + std::to_string(g2.ports()) +
                           " vs " + std::to_string(g1.ports()));
  }

  Matrix s = g2.scattering() * g1.scattering();
  Matrix coupling = g2.coupling() + g2.scattering() * g1.coupling();

  const Matrix m = g2.coupling().adjoint() * g2.scattering() * g1.coupling();
  Matrix omega = g1.hamiltonian().omega() + g2.hamiltonian().omega() +
                 (m - m.adjoint()) / Complex(0.0, 2.0);
  Matrix pump = g1.hamiltonian().pump() + g2.hamiltonian().pump();

  return {g1.registry(), std::move(s), std::move(coupling),
          QuadraticHamiltonian(std::move(omega), std::move(pump))};
}

SLHModel embed(const SLHModel& g, const ModeRegistry& target) {
  const Index n_from = g.modes();
  const Index n_to = target.size();

  // Selector with e_ij = 1 where source mode i sits at target slot j.
  Matrix sel = Matrix::Zero(n_from, n_to);
  for (Index i = 0; i < n_from; ++i) {
    sel(i, target.index(g.registry().name(i))) = 1.0;
  }

  Matrix coupling = g.coupling() * sel;
  Matrix omega = sel.transpose() * g.hamiltonian().omega() * sel;
  Matrix pump = sel.transpose() * g.hamiltonian().pump() * sel;

  return {target, g.scattering(), std::move(coupling),
          QuadraticHamiltonian(std::move(omega), std::move(pump))};
}

SLHModel identity_channels(const ModeRegistry& registry, Index ports) {
  return {registry, Matrix::Identity(ports, ports), Matrix::Zero(ports, registry.size()),
          QuadraticHamiltonian::zero(registry.size())};
}

SLHModel static_network(const ModeRegistry& registry, Matrix scattering) {
  const Index m = scattering.rows();
  return {registry, std::move(scattering), Matrix::Zero(m, registry.size()),
          QuadraticHamiltonian::zero(registry.size())};
}

SLHModel permutation_network(const ModeRegistry& registry,
                             const std::vector<Index>& destination) {
  const Index m = static_cast<Index>(destination.size());
  Matrix s = Matrix::Zero(m, m);
  for (Index k = 0; k < m; ++k) {
    const Index d = destination[static_cast<size_t>(k)];
    if (d < 0 || d >= m) throw ParameterError("permutation: destination out of range");
    s(d, k) = 1.0;
  }
  if (!is_unitary(s, 0.0)) throw ParameterError("permutation: destinations must be distinct");
  return static_network(registry, std::move(s));
}

}  // namespace slh
