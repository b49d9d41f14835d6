// Copyright (c) 2026 The slh-netsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "slh/components.hpp"

#include <cmath>
#include <string>

#include "slh/errors.hpp"

namespace slh {

namespace {

void check_rate(const char* name, double value) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw ParameterError(std::string(name) + ": negative rate (got " +
                         std::to_string(value) + ")");
  }
}

void check_loss(const char* name, double value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw ParameterError(std::string(name) + ": loss out of range (got " +
                         std::to_string(value) + ")");
  }
}

}  // namespace

void NetworkParams::validate() const {
  check_rate("gamma1", gamma1);
  check_rate("gamma2", gamma2);
  check_rate("gamma3", gamma3);
  check_rate("gamma4", gamma4);
  check_rate("gamma_l", gamma_l);
  check_rate("kappa", kappa);
  check_rate("kappa_l", kappa_l);
  check_loss("l1", l1);
  check_loss("l2", l2);
  check_loss("l3", l3);
  if (!std::isfinite(plant_detuning) || !std::isfinite(controller_detuning) ||
      !std::isfinite(phi) || !std::isfinite(x) || !std::isfinite(y) ||
      !std::isfinite(theta)) {
    throw ParameterError("network parameters must be finite");
  }
  if (input_amplitudes.size() != kNetworkPorts) {
    throw ParameterError("input_amplitudes: expected " + std::to_string(kNetworkPorts) +
                         " entries, got " + std::to_string(input_amplitudes.size()));
  }
}

SLHModel opo_port(const ModeRegistry& registry, std::string_view mode, double gamma,
                  double detuning, Complex pump_amplitude) {
  check_rate("gamma", gamma);
  const Index n = registry.size();
  const Index j = registry.index(mode);

  Matrix coupling = Matrix::Zero(1, n);
  coupling(0, j) = std::sqrt(gamma);
  Matrix omega = Matrix::Zero(n, n);
  omega(j, j) = detuning;
  Matrix pump = Matrix::Zero(n, n);
  pump(j, j) = pump_amplitude;

  return {registry, Matrix::Identity(1, 1), std::move(coupling),
          QuadraticHamiltonian(std::move(omega), std::move(pump))};
}

SLHModel passive_port(const ModeRegistry& registry, std::string_view mode, double gamma) {
  return opo_port(registry, mode, gamma);
}

SLHModel phase_shifter(double phi) {
  Matrix s(1, 1);
  s(0, 0) = std::polar(1.0, phi);
  return static_network(ModeRegistry{}, std::move(s));
}

SLHModel loss_beamsplitter(double l) {
  check_loss("l", l);
  const double a = std::sqrt(1.0 - l);
  const double b = std::sqrt(l);
  Matrix s(2, 2);
  s << a, b, -b, a;
  return static_network(ModeRegistry{}, std::move(s));
}

namespace {

// Splices a 2-port element into the loop so that the circulating channel
// (kept last in the running bundle) passes straight through the element's
// second port while a fresh idle channel enters its first.  The sign
// convention of loss_beamsplitter then sends the tapped-off part of the loop
// out with +sqrt(l) and folds the idle in with -sqrt(l).
SLHModel splice_loop_element(SLHModel chain, const SLHModel& element,
                             const ModeRegistry& reg) {
  const Index m = chain.ports();
  chain = concatenate(chain, identity_channels(reg, 1));  // append idle channel
  std::vector<Index> dest(static_cast<size_t>(m + 1));
  for (Index k = 0; k < m - 1; ++k) dest[static_cast<size_t>(k)] = k;
  dest[static_cast<size_t>(m - 1)] = m;  // loop stays last
  dest[static_cast<size_t>(m)] = m - 1;  // idle slots in just before it
  chain = series(permutation_network(reg, dest), chain);
  return series(concatenate(identity_channels(reg, m - 1), element), chain);
}

}  // namespace

SLHModel build_network(const NetworkParams& p) {
  p.validate();
  const ModeRegistry reg({"a", "b"});

  const SLHModel plant_in = opo_port(reg, "a", p.gamma1, p.plant_detuning, p.epsilon());
  const SLHModel plant_out = passive_port(reg, "a", p.gamma2);
  const SLHModel controller = opo_port(reg, "b", p.kappa, p.controller_detuning, p.eta());
  const SLHModel wire = identity_channels(reg, 1);

  // Loop, drive to detector, with the circulating channel kept last:
  // plant mirror 1 -> l1 -> controller -> phi -> l2 -> plant mirror 2 -> l3.
  SLHModel chain = concatenate(wire, plant_in);                     // [idle1, loop]
  chain = series(embed(loss_beamsplitter(p.l1), reg), chain);       // [tap1, loop]
  chain = series(concatenate(wire, controller), chain);
  chain = series(concatenate(wire, embed(phase_shifter(p.phi), reg)), chain);
  chain = splice_loop_element(std::move(chain),
                              embed(loss_beamsplitter(p.l2), reg), reg);
  chain = series(concatenate(identity_channels(reg, 2), plant_out), chain);
  chain = splice_loop_element(std::move(chain),
                              embed(loss_beamsplitter(p.l3), reg), reg);

  // Outputs to [detected, tap3, tap2, tap1]; drive becomes input 0.
  chain = series(permutation_network(reg, {3, 2, 1, 0}), chain);
  chain = series(chain, permutation_network(reg, {1, 0, 2, 3}));

  SLHModel net = concatenate(chain, passive_port(reg, "a", p.gamma3));
  net = concatenate(net, passive_port(reg, "a", p.gamma4));
  net = concatenate(net, passive_port(reg, "a", p.gamma_l));
  net = concatenate(net, passive_port(reg, "b", p.kappa_l));
  return net;
}

SLHModel build_mirror_network(const NetworkParams& p) {
  p.validate();
  const ModeRegistry reg({"a"});

  const SLHModel plant_in = opo_port(reg, "a", p.gamma1, p.plant_detuning, p.epsilon());
  const SLHModel plant_out = passive_port(reg, "a", p.gamma2);
  const SLHModel wire = identity_channels(reg, 1);

  SLHModel chain = concatenate(wire, plant_in);
  chain = series(embed(loss_beamsplitter(p.l1), reg), chain);
  chain = series(concatenate(wire, identity_channels(reg, 1)), chain);  // mirror: r = 1
  chain = series(concatenate(wire, embed(phase_shifter(p.phi), reg)), chain);
  chain = splice_loop_element(std::move(chain),
                              embed(loss_beamsplitter(p.l2), reg), reg);
  chain = series(concatenate(identity_channels(reg, 2), plant_out), chain);
  chain = splice_loop_element(std::move(chain),
                              embed(loss_beamsplitter(p.l3), reg), reg);

  chain = series(permutation_network(reg, {3, 2, 1, 0}), chain);
  chain = series(chain, permutation_network(reg, {1, 0, 2, 3}));

  SLHModel net = concatenate(chain, passive_port(reg, "a", p.gamma3));
  net = concatenate(net, passive_port(reg, "a", p.gamma4));
  net = concatenate(net, passive_port(reg, "a", p.gamma_l));
  return net;
}

}  // namespace slh
