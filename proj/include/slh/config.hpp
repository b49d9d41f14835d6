// Copyright (c) 2026 The slh-netsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "slh/components.hpp"
#include "slh/types.hpp"

namespace slh {

enum class Preset {
  kOpenLoop,
  kEmptyCavityFeedback,
  kOpoNetwork,
  kDetunedController,
  kPhaseScan,
  kStabilityScan,
  kCustom,
};

std::string_view preset_name(Preset preset);
Preset preset_from_name(std::string_view name);  // throws ConfigError on unknown name

struct GridSpec {
  double start_hz = 0.0;
  double stop_hz = 20.0e6;
  Index points = 1024;

  bool operator==(const GridSpec&) const = default;
};

enum class OutputFormat { kCsv, kJson };

struct OutputSpec {
  std::string path;  // empty: <outdir>/<preset>.<ext>, outdir from $SLH_NETSIM_OUTDIR or "."
  OutputFormat format = OutputFormat::kCsv;
  bool emit_plot_script = false;
  bool include_open_loop = false;
  Index port = kPortHomodyne;  // spectrum port
  Index scan_port = kPortTapL2;  // monitored port for phase scans

  bool operator==(const OutputSpec&) const = default;
};

// A full experiment description in the units used by config files: rates in
// rad/s, detunings in Hz, angles in rad.  Values round-trip exactly through
// serialize_config/parse_config; the rad/s network description is assembled
// on demand by network_params().
struct ExperimentConfig {
  Preset preset = Preset::kCustom;

  // [network]
  double gamma1 = 18.0e6;
  double gamma2 = 36.0e6;
  double gamma3 = 2.0e6;
  double gamma4 = 0.45e6;
  double gamma_l = 9.0e6;
  double kappa = 61.0e6;
  double kappa_l = 5.7e6;
  double plant_detuning_hz = 0.0;
  double detuning_hz = 0.0;
  double phi = 3.14159265358979323846;
  double l1 = 0.035;
  double l2 = 0.27;
  double l3 = 0.30;
  double x = 0.0;
  double y = 0.0;

  // [experiment]
  double theta = 0.0;  // homodyne quadrature angle, rad
  double drive = 0.0;  // coherent amplitude on the main input, sqrt(photons/s)

  GridSpec grid;
  OutputSpec output;

  NetworkParams network_params() const;

  bool operator==(const ExperimentConfig&) const = default;
};

// Fully populated defaults for a preset (the baseline network rates plus
// the per-preset pump, loss, and detuning settings).
ExperimentConfig preset_config(Preset preset);

// Parses the INI-style config grammar documented in the README.  A `preset`
// key is applied first (establishing defaults); remaining keys override it
// in file order.  Unknown keys, malformed lines, and out-of-range values
// throw ConfigError carrying the offending line number.
ExperimentConfig parse_config(const std::string& text);

// Inverse of parse_config: emits every field explicitly with exact
// round-trip float formatting, so parse_config(serialize_config(c)) == c.
std::string serialize_config(const ExperimentConfig& config);

// Range checks shared by parse_config and the CLI; throws ConfigError with
// the offending key name.
void validate_config(const ExperimentConfig& config);

}  // namespace slh
