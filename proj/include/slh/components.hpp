// Copyright (c) 2026 The slh-netsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>

#include "slh/compose.hpp"
#include "slh/slh_model.hpp"

namespace slh {

// Output port order of build_network().
inline constexpr Index kPortHomodyne = 0;        // detected output
inline constexpr Index kPortTapL3 = 1;           // detection-path loss tap
inline constexpr Index kPortTapL2 = 2;           // controller-to-plant loss tap
inline constexpr Index kPortTapL1 = 3;           // plant-to-controller loss tap
inline constexpr Index kPortPlantAux1 = 4;       // plant rate gamma3
inline constexpr Index kPortPlantAux2 = 5;       // plant rate gamma4
inline constexpr Index kPortPlantLoss = 6;       // plant intracavity loss
inline constexpr Index kPortControllerLoss = 7;  // controller intracavity loss
inline constexpr Index kNetworkPorts = 8;

// Parameters of the two-cavity feedback network.  All rates and detunings
// are angular (rad/s); losses are power fractions in [0, 1]; x and y are the
// plant/controller pump strengths normalised to threshold of the respective
// uncoupled cavity (x = 2*eps/gamma_total, y = 2*eta/kappa_total); theta is
// the homodyne quadrature angle.  Defaults reproduce the reference hardware.
struct NetworkParams {
  double gamma1 = 18.0e6;
  double gamma2 = 36.0e6;
  double gamma3 = 2.0e6;
  double gamma4 = 0.45e6;
  double gamma_l = 9.0e6;
  double kappa = 61.0e6;
  double kappa_l = 5.7e6;
  double plant_detuning = 0.0;
  double controller_detuning = 0.0;
  double phi = 3.14159265358979323846;
  double l1 = 0.035;
  double l2 = 0.27;
  double l3 = 0.30;
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;
  Vector input_amplitudes = Vector::Zero(kNetworkPorts);  // sqrt(photons/s)

  double gamma_total() const { return gamma1 + gamma2 + gamma3 + gamma4 + gamma_l; }
  double kappa_total() const { return kappa + kappa_l; }
  double epsilon() const { return 0.5 * x * gamma_total(); }
  double eta() const { return 0.5 * y * kappa_total(); }

  void validate() const;  // throws ParameterError naming the offending field
};

// One cavity port: coupling sqrt(gamma) on `mode`, optional detuning on the
// omega diagonal and pump amplitude on the pump diagonal.
SLHModel opo_port(const ModeRegistry& registry, std::string_view mode, double gamma,
                  double detuning = 0.0, Complex pump_amplitude = 0.0);

// opo_port without detuning or pump.
SLHModel passive_port(const ModeRegistry& registry, std::string_view mode, double gamma);

// Single channel picking up phase e^{i phi}; lives on an empty registry.
SLHModel phase_shifter(double phi);

// Two-port splitter modelling a power loss l: S = [[a, b], [-b, a]] with
// a = sqrt(1-l), b = sqrt(l).  Lives on an empty registry.
SLHModel loss_beamsplitter(double l);

// The full feedback network on modes {a (plant), b (controller)}: the plant's
// first mirror feeds the controller through loss l1, the controller feeds the
// plant's second mirror through phase phi and loss l2, and the detected
// output passes loss l3.  Remaining plant/controller ports are concatenated.
// Ports follow the kPort* order above; inputs are [drive, l1 idle, l2 idle,
// l3 idle, gamma3, gamma4, plant loss, controller loss].
SLHModel build_network(const NetworkParams& p);

// Same loop with the controller cavity replaced by a perfect mirror (unit
// reflection, no mode b): 7 ports, the controller-loss port is absent.  This
// is the limit the full network approaches as |controller_detuning| grows.
SLHModel build_mirror_network(const NetworkParams& p);

}  // namespace slh
