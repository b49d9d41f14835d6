// Copyright (c) 2026 The slh-netsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slh/analysis.hpp"
#include "slh/config.hpp"

namespace slh {

// Everything one config evaluates to.  Spectrum presets produce the standard
// curve set: `squeeze` (pump signs flipped), `antisqueeze` (pump signs as
// configured), `vacuum` (pumps off), and, when requested, `openloop_squeeze`
// and `openloop_antisqueeze` (same pumps, feedback path fully lost).  The
// detuned-controller preset additionally runs a phase scan first and takes
// its spectra at the minimizing phase.
struct ExperimentResult {
  ExperimentConfig config;  // resolved
  std::string kind;         // "spectrum" | "phase_scan" | "stability_scan"
  std::vector<std::pair<std::string, SpectrumResult>> spectra;
  std::optional<PhaseScanResult> phase;
  std::optional<StabilityScanResult> stability_curve;
};

ExperimentResult run_experiment(const ExperimentConfig& config);

// Serialisers.  All floats are written with 12 significant digits so that
// identical configs produce byte-identical files.
std::string spectrum_csv(const ExperimentResult& result);
std::string phase_scan_csv(const PhaseScanResult& scan);
std::string stability_scan_csv(const StabilityScanResult& scan);
std::string result_json(const ExperimentResult& result);

// matplotlib script that re-renders the main data file.
std::string plot_script(const ExperimentResult& result, const std::string& data_path);

// Output file for this result: output.path if set, else
// $SLH_NETSIM_OUTDIR(or ".")/<preset>.<format extension>.
std::string resolve_output_path(const ExperimentConfig& config);

// Writes the main data file plus any side-car files (detuned-controller
// phase scan, plot script); returns the paths written, main file first.
std::vector<std::string> write_outputs(const ExperimentResult& result);

}  // namespace slh
