// Copyright (c) 2026 The slh-netsim Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <numbers>
#include <string>

#include "slh/config.hpp"
#include "slh/errors.hpp"

namespace slh {

TEST_CASE("empty config text yields the baseline custom experiment") {
  const ExperimentConfig c = parse_config("");
  CHECK(c == preset_config(Preset::kCustom));
  CHECK(c.preset == Preset::kCustom);
  CHECK(c.gamma1 == 18.0e6);
  CHECK(c.gamma2 == 36.0e6);
  CHECK(c.gamma3 == 2.0e6);
  CHECK(c.gamma4 == 0.45e6);
  CHECK(c.gamma_l == 9.0e6);
  CHECK(c.kappa == 61.0e6);
  CHECK(c.kappa_l == 5.7e6);
  CHECK(c.l1 == 0.035);
  CHECK(c.l2 == 0.27);
  CHECK(c.l3 == 0.30);
  CHECK(c.x == 0.0);
  CHECK(c.y == 0.0);
  CHECK(c.phi == doctest::Approx(std::numbers::pi).epsilon(1e-15));
  CHECK(c.grid.points == 1024);
  CHECK(c.grid.stop_hz == 20.0e6);
  CHECK(c.output.format == OutputFormat::kCsv);
  CHECK(c.output.port == kPortHomodyne);
  CHECK(c.output.scan_port == kPortTapL2);
}

TEST_CASE("preset names round-trip and reject unknowns") {
  for (const Preset p : {Preset::kOpenLoop, Preset::kEmptyCavityFeedback, Preset::kOpoNetwork,
                         Preset::kDetunedController, Preset::kPhaseScan, Preset::kStabilityScan,
                         Preset::kCustom}) {
    CHECK(preset_from_name(preset_name(p)) == p);
  }
  CHECK(preset_name(Preset::kOpoNetwork) == "opo_network");
  CHECK_THROWS_WITH_AS(
      preset_from_name("warp"),
      "unknown preset 'warp' (expected open_loop, empty_cavity_feedback, opo_network, "
      "detuned_controller, phase_scan, stability_scan, custom)",
      ConfigError);
}

TEST_CASE("preset defaults carry the documented operating points") {
  const auto open = preset_config(Preset::kOpenLoop);
  CHECK(open.l1 == 1.0);
  CHECK(open.l2 == 1.0);
  CHECK(open.x == 0.79);
  CHECK_FALSE(open.output.include_open_loop);

  const auto empty = preset_config(Preset::kEmptyCavityFeedback);
  CHECK(empty.x == 0.33);
  CHECK(empty.y == 0.0);
  CHECK(empty.output.include_open_loop);

  const auto opo = preset_config(Preset::kOpoNetwork);
  CHECK(opo.x == 0.32);
  CHECK(opo.y == 0.10);
  CHECK(opo.output.include_open_loop);

  const auto detuned = preset_config(Preset::kDetunedController);
  CHECK(detuned.x == 0.29);
  CHECK(detuned.detuning_hz == 16.0e6);
  CHECK(detuned.drive == 3.16227766016838e6);
  CHECK(detuned.output.include_open_loop);

  const auto scan = preset_config(Preset::kPhaseScan);
  CHECK(scan.detuning_hz == 16.0e6);
  CHECK(scan.drive == 3.16227766016838e6);
  CHECK(scan.x == 0.0);
}

TEST_CASE("config text round-trips through serialize_config") {
  for (const Preset p : {Preset::kOpenLoop, Preset::kEmptyCavityFeedback, Preset::kOpoNetwork,
                         Preset::kDetunedController, Preset::kPhaseScan, Preset::kStabilityScan,
                         Preset::kCustom}) {
    const ExperimentConfig c = preset_config(p);
    CHECK(parse_config(serialize_config(c)) == c);
  }

  ExperimentConfig odd = preset_config(Preset::kCustom);
  odd.x = 0.123456789012345678;
  odd.y = -1.0 / 3.0;
  odd.theta = std::numbers::pi / 7.0;
  odd.drive = 3.16227766016838e6;
  odd.plant_detuning_hz = -2.5e5;
  odd.detuning_hz = 16.0e6;
  odd.grid = {0.5e6, 19.5e6, 777};
  odd.output.path = "out/run.json";
  odd.output.format = OutputFormat::kJson;
  odd.output.emit_plot_script = true;
  odd.output.include_open_loop = true;
  odd.output.port = kPortTapL1;
  odd.output.scan_port = kPortHomodyne;
  CHECK(parse_config(serialize_config(odd)) == odd);
  // And serialization itself is a fixed point.
  CHECK(serialize_config(parse_config(serialize_config(odd))) == serialize_config(odd));
}

TEST_CASE("a preset line establishes defaults before overrides, wherever it appears") {
  const std::string text =
      "[network]\n"
      "x = 0.5  # overrides the preset pump\n"
      "\n"
      "[experiment]\n"
      "preset = open_loop\n";
  const ExperimentConfig c = parse_config(text);
  CHECK(c.preset == Preset::kOpenLoop);
  CHECK(c.l1 == 1.0);  // from the preset
  CHECK(c.l2 == 1.0);
  CHECK(c.x == 0.5);  // the explicit key wins
}

TEST_CASE("comments, blank lines, and spacing are tolerated") {
  const std::string text =
      "# experiment description\n"
      "\n"
      "[experiment]\n"
      "  theta =   1.25\n"
      "[grid]\n"
      "points = 64   # coarse\n"
      "stop_hz = 1e7\n";
  const ExperimentConfig c = parse_config(text);
  CHECK(c.theta == 1.25);
  CHECK(c.grid.points == 64);
  CHECK(c.grid.stop_hz == 1.0e7);
}

TEST_CASE("parse errors carry the offending line") {
  CHECK_THROWS_WITH_AS(parse_config("[network]\nl3 = 1.2\n"),
                       "line 2: l3: loss out of range (got 1.200000)", ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("[output]\nspam = 1\n"),
                       "line 2: unknown key 'spam' in [output]", ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("[outputs]\n"), "line 1: unknown section [outputs]",
                       ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("[grid\n"), "line 1: unterminated section header",
                       ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("[grid]\npoints 7\n"),
                       "line 2: expected 'key = value', got 'points 7'", ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("x = 1\n"), "line 1: key outside of any section",
                       ConfigError);
  CHECK_THROWS_WITH_AS(
      parse_config("[experiment]\npreset = custom\npreset = custom\n"),
      "line 3: duplicate preset key", ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("[network]\nx = fast\n"),
                       "line 2: x: invalid number 'fast'", ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("[output]\nemit_plot_script = yes\n"),
                       "line 2: emit_plot_script: expected true or false, got 'yes'",
                       ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("[output]\nformat = xml\n"),
                       "line 2: format: expected csv or json, got 'xml'", ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("[output]\nport = 9\n"),
                       "line 2: port: out of range (got 9, network has 8 ports)", ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("[grid]\npoints = 512.5\n"),
                       "line 2: points: invalid integer '512.5'", ConfigError);

  try {
    parse_config("[network]\ngamma2 = -3\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()) == "line 2: gamma2: negative rate (got -3.000000)");
  }
}

TEST_CASE("whole-config validation catches cross-field problems") {
  CHECK_THROWS_WITH_AS(parse_config("[grid]\npoints = 1\n"),
                       "points: need at least 2 grid points (got 1)", ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("[grid]\nstop_hz = 0\n"),
                       "stop_hz: grid stop must exceed start", ConfigError);

  ExperimentConfig c = preset_config(Preset::kCustom);
  c.gamma1 = -1.0;
  CHECK_THROWS_WITH_AS(validate_config(c), "gamma1: negative rate (got -1.000000)",
                       ConfigError);
  c = preset_config(Preset::kCustom);
  c.output.scan_port = 12;
  CHECK_THROWS_WITH_AS(validate_config(c), "scan_port: out of range (got 12)", ConfigError);
}

TEST_CASE("network_params converts detunings to angular frequency and sets the drive") {
  ExperimentConfig c = preset_config(Preset::kDetunedController);
  c.theta = 0.3;
  const NetworkParams p = c.network_params();
  CHECK(p.controller_detuning ==
        doctest::Approx(2.0 * std::numbers::pi * 16.0e6).epsilon(1e-15));
  CHECK(p.plant_detuning == 0.0);
  CHECK(p.gamma1 == c.gamma1);
  CHECK(p.kappa_l == c.kappa_l);
  CHECK(p.x == c.x);
  CHECK(p.theta == 0.3);
  CHECK(p.input_amplitudes.size() == kNetworkPorts);
  CHECK(p.input_amplitudes(0) == Complex(3.16227766016838e6));
  CHECK(p.input_amplitudes.tail(7).cwiseAbs().maxCoeff() == 0.0);
  // The squared drive is the photon flux used by the reference scans.
  CHECK(std::norm(p.input_amplitudes(0)) == doctest::Approx(1.0e13).epsilon(1e-12));
}

}  // namespace slh
