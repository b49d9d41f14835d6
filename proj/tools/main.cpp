// Copyright (c) 2026 The slh-netsim Authors
// SPDX-License-Identifier: Apache-2.0

#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "slh/errors.hpp"
#include "slh/experiment.hpp"
#include "slh/version.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw slh::Error("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void print_summary(const slh::ExperimentResult& result) {
  std::cout << "preset: " << slh::preset_name(result.config.preset) << "\n";
  if (result.phase) {
    std::cout << "phi_star: " << result.phase->phi_star << " rad\n";
  }
  if (result.stability_curve) {
    const auto& h = result.stability_curve->hurwitz;
    slh::Index first_unstable = -1;
    for (size_t i = 0; i < h.size(); ++i) {
      if (!h[i]) { first_unstable = static_cast<slh::Index>(i); break; }
    }
    if (first_unstable >= 0) {
      std::cout << "first unstable pump: x = " << result.stability_curve->xs(first_unstable)
                << "\n";
    } else {
      std::cout << "Hurwitz over the whole pump grid\n";
    }
  }
  for (const auto& [name, spectrum] : result.spectra) {
    slh::Index extremum = 0;
    spectrum.values_db.cwiseAbs().maxCoeff(&extremum);
    std::cout << name << ": extremum " << spectrum.values_db(extremum) << " dB at "
              << spectrum.frequencies_hz(extremum) / 1e6 << " MHz\n";
  }
}

int run_and_write(const slh::ExperimentConfig& config) {
  const slh::ExperimentResult result = slh::run_experiment(config);
  for (const std::string& path : slh::write_outputs(result)) {
    std::cout << "wrote " << path << "\n";
  }
  print_summary(result);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Squeezing spectra and stability of a coherent-feedback OPO network"};
  app.set_version_flag("--version", std::string(slh::kToolName) + " " + slh::kVersion);
  app.require_subcommand(1);

  std::string config_path;
  auto* run = app.add_subcommand("run", "Run the experiment described by a config file");
  run->add_option("config", config_path, "config file")->required();

  std::string preset_name;
  std::optional<double> opt_x, opt_y, opt_phi, opt_detuning_hz;
  std::string out_path, format;
  auto* preset = app.add_subcommand("preset", "Run a named preset with optional overrides");
  preset->add_option("name", preset_name,
                     "open_loop | empty_cavity_feedback | opo_network | detuned_controller | "
                     "phase_scan | stability_scan | custom")
      ->required();
  preset->add_option("--x", opt_x, "plant pump strength");
  preset->add_option("--y", opt_y, "controller pump strength");
  preset->add_option("--phi", opt_phi, "feedback phase (rad)");
  preset->add_option("--detuning-hz", opt_detuning_hz, "controller detuning (Hz)");
  preset->add_option("--out", out_path, "output file path");
  preset->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Parse and validate a config file");
  validate->add_option("config", validate_path, "config file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      return run_and_write(slh::parse_config(read_file(config_path)));
    }
    if (preset->parsed()) {
      slh::ExperimentConfig config = slh::preset_config(slh::preset_from_name(preset_name));
      if (opt_x) config.x = *opt_x;
      if (opt_y) config.y = *opt_y;
      if (opt_phi) config.phi = *opt_phi;
      if (opt_detuning_hz) config.detuning_hz = *opt_detuning_hz;
      if (!out_path.empty()) config.output.path = out_path;
      if (!format.empty()) {
        config.output.format =
            format == "csv" ? slh::OutputFormat::kCsv : slh::OutputFormat::kJson;
      }
      slh::validate_config(config);
      return run_and_write(config);
    }
    const slh::ExperimentConfig config = slh::parse_config(read_file(validate_path));
    std::cout << "OK\n" << slh::serialize_config(config);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
