// Copyright (c) 2026 The slh-netsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "slh/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>

#include <json.hpp>

#include "slh/errors.hpp"
#include "slh/version.hpp"

namespace slh {

namespace {

using nlohmann::json;

std::string fmt12(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

json to_json_array(const RealVector& v) {
  json arr = json::array();
  for (Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

json config_json(const ExperimentConfig& c) {
  return json{
      {"preset", std::string(preset_name(c.preset))},
      {"theta", c.theta},
      {"drive", c.drive},
      {"network",
       {{"gamma1", c.gamma1},
        {"gamma2", c.gamma2},
        {"gamma3", c.gamma3},
        {"gamma4", c.gamma4},
        {"gamma_l", c.gamma_l},
        {"kappa", c.kappa},
        {"kappa_l", c.kappa_l},
        {"plant_detuning_hz", c.plant_detuning_hz},
        {"detuning_hz", c.detuning_hz},
        {"phi", c.phi},
        {"l1", c.l1},
        {"l2", c.l2},
        {"l3", c.l3},
        {"x", c.x},
        {"y", c.y}}},
      {"grid", {{"start_hz", c.grid.start_hz}, {"stop_hz", c.grid.stop_hz}, {"points", c.grid.points}}},
      {"output",
       {{"path", c.output.path},
        {"format", c.output.format == OutputFormat::kCsv ? "csv" : "json"},
        {"emit_plot_script", c.output.emit_plot_script},
        {"include_open_loop", c.output.include_open_loop},
        {"port", c.output.port},
        {"scan_port", c.output.scan_port}}}};
}

void add_spectra(ExperimentResult& result, const ExperimentConfig& cfg, double phi) {
  const RealVector grid = linspace(cfg.grid.start_hz, cfg.grid.stop_hz, cfg.grid.points);
  const auto spectrum_for = [&](double x, double y, bool open_loop) {
    NetworkParams p = cfg.network_params();
    p.phi = phi;
    p.x = x;
    p.y = y;
    if (open_loop) p.l1 = p.l2 = 1.0;
    const DoubledUpSystem sys = to_abcd(build_network(p));
    return squeezing_spectrum(sys, cfg.output.port, cfg.theta, grid, p.input_amplitudes);
  };
  result.spectra.emplace_back("squeeze", spectrum_for(-cfg.x, -cfg.y, false));
  result.spectra.emplace_back("antisqueeze", spectrum_for(cfg.x, cfg.y, false));
  result.spectra.emplace_back("vacuum", spectrum_for(0.0, 0.0, false));
  if (cfg.output.include_open_loop) {
    result.spectra.emplace_back("openloop_squeeze", spectrum_for(-cfg.x, -cfg.y, true));
    result.spectra.emplace_back("openloop_antisqueeze", spectrum_for(cfg.x, cfg.y, true));
  }
}

double max_stable_power(const PhaseScanResult& scan) {
  double best = 0.0;
  for (Index i = 0; i < scan.powers.size(); ++i) {
    if (scan.stable[static_cast<size_t>(i)] && scan.powers(i) > best) best = scan.powers(i);
  }
  return best > 0.0 ? best : 1.0;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
  validate_config(config);
  ExperimentResult result;
  result.config = config;
  const NetworkParams params = config.network_params();
  switch (config.preset) {
    case Preset::kPhaseScan: {
      result.kind = "phase_scan";
      const RealVector phis = linspace(0.0, 2.0 * std::numbers::pi, config.grid.points);
      result.phase = phase_scan(params, config.output.scan_port, phis);
      break;
    }
    case Preset::kStabilityScan: {
      result.kind = "stability_scan";
      const RealVector xs = linspace(0.0, 1.5, config.grid.points);
      result.stability_curve = stability_scan(params, xs);
      break;
    }
    case Preset::kDetunedController: {
      result.kind = "spectrum";
      const RealVector phis = linspace(0.0, 2.0 * std::numbers::pi, config.grid.points);
      result.phase = phase_scan(params, config.output.scan_port, phis);
      add_spectra(result, config, result.phase->phi_star);
      break;
    }
    default:
      result.kind = "spectrum";
      add_spectra(result, config, config.phi);
      break;
  }
  return result;
}

std::string spectrum_csv(const ExperimentResult& result) {
  std::string out = "freq_hz,P,P_db,curve\n";
  for (const auto& [name, spectrum] : result.spectra) {
    for (Index i = 0; i < spectrum.frequencies_hz.size(); ++i) {
      out += fmt12(spectrum.frequencies_hz(i)) + "," + fmt12(spectrum.values(i)) + "," +
             fmt12(spectrum.values_db(i)) + "," + name + "\n";
    }
  }
  return out;
}

std::string phase_scan_csv(const PhaseScanResult& scan) {
  std::string out = "phi_rad,power,relative_power,stable\n";
  const double denom = max_stable_power(scan);
  for (Index i = 0; i < scan.phis.size(); ++i) {
    const bool ok = scan.stable[static_cast<size_t>(i)];
    out += fmt12(scan.phis(i)) + "," + fmt12(scan.powers(i)) + "," +
           fmt12(scan.powers(i) / denom) + "," + (ok ? "1" : "0") + "\n";
  }
  return out;
}

std::string stability_scan_csv(const StabilityScanResult& scan) {
  std::string out = "x,max_real_part,hurwitz\n";
  for (Index i = 0; i < scan.xs.size(); ++i) {
    out += fmt12(scan.xs(i)) + "," + fmt12(scan.max_real_parts(i)) + "," +
           (scan.hurwitz[static_cast<size_t>(i)] ? "1" : "0") + "\n";
  }
  return out;
}

std::string result_json(const ExperimentResult& result) {
  json doc{{"tool", kToolName}, {"version", kVersion}, {"kind", result.kind},
           {"config", config_json(result.config)}};
  if (!result.spectra.empty()) {
    json curves = json::array();
    for (const auto& [name, s] : result.spectra) {
      curves.push_back({{"name", name},
                        {"port", s.port},
                        {"theta", s.theta},
                        {"freq_hz", to_json_array(s.frequencies_hz)},
                        {"P", to_json_array(s.values)},
                        {"P_db", to_json_array(s.values_db)},
                        {"dc_amplitude_re", s.dc_amplitude.real()},
                        {"dc_amplitude_im", s.dc_amplitude.imag()},
                        {"dc_delta_weight", s.dc_delta_weight}});
    }
    doc["curves"] = std::move(curves);
  }
  if (result.phase) {
    const PhaseScanResult& scan = *result.phase;
    json stable = json::array();
    json powers = json::array();
    for (Index i = 0; i < scan.phis.size(); ++i) {
      const bool ok = scan.stable[static_cast<size_t>(i)];
      stable.push_back(ok);
      powers.push_back(ok ? json(scan.powers(i)) : json());  // null where unstable
    }
    doc["phase_scan"] = {{"phi_rad", to_json_array(scan.phis)},
                         {"power", std::move(powers)},
                         {"stable", std::move(stable)},
                         {"phi_star", scan.phi_star},
                         {"argmin", scan.argmin}};
  }
  if (result.stability_curve) {
    const StabilityScanResult& scan = *result.stability_curve;
    json hurwitz = json::array();
    for (const bool ok : scan.hurwitz) hurwitz.push_back(ok);
    doc["stability_scan"] = {{"x", to_json_array(scan.xs)},
                             {"max_real_part", to_json_array(scan.max_real_parts)},
                             {"hurwitz", std::move(hurwitz)}};
  }
  return doc.dump(2) + "\n";
}

std::string plot_script(const ExperimentResult& result, const std::string& data_path) {
  const std::string stem = std::filesystem::path(data_path).stem().string();
  const bool is_json = result.config.output.format == OutputFormat::kJson;
  std::string s;
  s += "#!/usr/bin/env python3\n";
  s += "\"\"\"Render " + data_path + " (generated by " + std::string(kToolName) + ").\"\"\"\n";
  s += "import os\n\nimport matplotlib\n\nmatplotlib.use(\"Agg\")\nimport matplotlib.pyplot as plt\n\n";
  s += "here = os.path.dirname(os.path.abspath(__file__))\n";
  s += "data = os.path.join(here, " + json(std::filesystem::path(data_path).filename().string()).dump() + ")\n\n";
  if (is_json) {
    s += "import json\n\nwith open(data) as f:\n    doc = json.load(f)\n\n";
    if (result.kind == "spectrum") {
      s += "fig, ax = plt.subplots(figsize=(7, 4.5))\n";
      s += "for curve in doc[\"curves\"]:\n";
      s += "    ax.plot([f / 1e6 for f in curve[\"freq_hz\"]], curve[\"P_db\"], label=curve[\"name\"])\n";
      s += "ax.set_xlabel(\"frequency (MHz)\")\nax.set_ylabel(\"P (dB rel. vacuum)\")\n";
    } else if (result.kind == "phase_scan") {
      s += "scan = doc[\"phase_scan\"]\n";
      s += "fig, ax = plt.subplots(figsize=(7, 4.5))\n";
      s += "pts = [(p, v) for p, v in zip(scan[\"phi_rad\"], scan[\"power\"]) if v is not None]\n";
      s += "peak = max(v for _, v in pts)\n";
      s += "ax.plot([p for p, _ in pts], [v / peak for _, v in pts], label=\"relative power\")\n";
      s += "ax.axvline(scan[\"phi_star\"], ls=\"--\", color=\"gray\", label=\"phi*\")\n";
      s += "ax.set_xlabel(\"feedback phase (rad)\")\nax.set_ylabel(\"relative power\")\n";
    } else {
      s += "scan = doc[\"stability_scan\"]\n";
      s += "fig, ax = plt.subplots(figsize=(7, 4.5))\n";
      s += "ax.plot(scan[\"x\"], [m / 1e6 for m in scan[\"max_real_part\"]], label=\"max Re eig\")\n";
      s += "ax.axhline(0.0, ls=\"--\", color=\"gray\")\n";
      s += "ax.set_xlabel(\"pump x\")\nax.set_ylabel(\"max Re eigenvalue (Mrad/s)\")\n";
    }
  } else {
    s += "import csv\n\nrows = []\nwith open(data) as f:\n";
    s += "    for row in csv.DictReader(f):\n        rows.append(row)\n\n";
    s += "fig, ax = plt.subplots(figsize=(7, 4.5))\n";
    if (result.kind == "spectrum") {
      s += "curves = {}\n";
      s += "for row in rows:\n";
      s += "    curves.setdefault(row[\"curve\"], []).append((float(row[\"freq_hz\"]), float(row[\"P_db\"])))\n";
      s += "for name, pts in curves.items():\n";
      s += "    ax.plot([f / 1e6 for f, _ in pts], [p for _, p in pts], label=name)\n";
      s += "ax.set_xlabel(\"frequency (MHz)\")\nax.set_ylabel(\"P (dB rel. vacuum)\")\n";
    } else if (result.kind == "phase_scan") {
      s += "pts = [(float(r[\"phi_rad\"]), float(r[\"relative_power\"])) for r in rows if r[\"stable\"] == \"1\"]\n";
      s += "ax.plot([p for p, _ in pts], [v for _, v in pts], label=\"relative power\")\n";
      s += "ax.set_xlabel(\"feedback phase (rad)\")\nax.set_ylabel(\"relative power\")\n";
    } else {
      s += "ax.plot([float(r[\"x\"]) for r in rows], [float(r[\"max_real_part\"]) / 1e6 for r in rows], label=\"max Re eig\")\n";
      s += "ax.axhline(0.0, ls=\"--\", color=\"gray\")\n";
      s += "ax.set_xlabel(\"pump x\")\nax.set_ylabel(\"max Re eigenvalue (Mrad/s)\")\n";
    }
  }
  s += "ax.legend()\nax.grid(True, alpha=0.3)\nfig.tight_layout()\n";
  s += "fig.savefig(os.path.join(here, " + json(stem + ".png").dump() + "), dpi=200)\n";
  s += "print(\"wrote \" + os.path.join(here, " + json(stem + ".png").dump() + "))\n";
  return s;
}

std::string resolve_output_path(const ExperimentConfig& config) {
  if (!config.output.path.empty()) return config.output.path;
  const char* outdir = std::getenv("SLH_NETSIM_OUTDIR");
  const std::filesystem::path dir = (outdir && *outdir) ? outdir : ".";
  const std::string ext = config.output.format == OutputFormat::kCsv ? ".csv" : ".json";
  return (dir / (std::string(preset_name(config.preset)) + ext)).string();
}

namespace {

void write_text_file(const std::string& path, const std::string& text) {
  const std::filesystem::path parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw Error("failed writing '" + path + "'");
}

std::string with_suffix(const std::string& path, const std::string& suffix,
                        const std::string& ext) {
  std::filesystem::path p(path);
  const std::string stem = p.stem().string();
  return (p.parent_path() / (stem + suffix + ext)).string();
}

}  // namespace

std::vector<std::string> write_outputs(const ExperimentResult& result) {
  const std::string main_path = resolve_output_path(result.config);
  std::vector<std::string> written;

  if (result.config.output.format == OutputFormat::kJson) {
    write_text_file(main_path, result_json(result));
  } else if (result.kind == "spectrum") {
    write_text_file(main_path, spectrum_csv(result));
  } else if (result.kind == "phase_scan") {
    write_text_file(main_path, phase_scan_csv(*result.phase));
  } else {
    write_text_file(main_path, stability_scan_csv(*result.stability_curve));
  }
  written.push_back(main_path);

  // The detuned-controller preset carries a phase scan next to its spectra;
  // in CSV mode that goes to a side-car file (JSON already embeds it).
  if (result.config.output.format == OutputFormat::kCsv && result.kind == "spectrum" &&
      result.phase) {
    const std::string scan_path = with_suffix(main_path, "_phase_scan", ".csv");
    write_text_file(scan_path, phase_scan_csv(*result.phase));
    written.push_back(scan_path);
  }

  if (result.config.output.emit_plot_script) {
    const std::string script_path = with_suffix(main_path, "_plot", ".py");
    write_text_file(script_path, plot_script(result, main_path));
    written.push_back(script_path);
  }
  return written;
}

}  // namespace slh
