// Copyright (c) 2026 The slh-netsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "slh/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <vector>

#include "slh/errors.hpp"

namespace slh {

namespace {

constexpr std::string_view kPresetNames[] = {
    "open_loop",      "empty_cavity_feedback", "opo_network", "detuned_controller",
    "phase_scan",     "stability_scan",        "custom",
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view key, std::string_view value, int line) {
  double out = 0.0;
  const char* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end || !std::isfinite(out)) {
    throw ConfigError(std::string(key) + ": invalid number '" + std::string(value) + "'", line);
  }
  return out;
}

Index parse_index(std::string_view key, std::string_view value, int line) {
  Index out = 0;
  const char* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError(std::string(key) + ": invalid integer '" + std::string(value) + "'", line);
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view value, int line) {
  if (value == "true") return true;
  if (value == "false") return false;
  throw ConfigError(std::string(key) + ": expected true or false, got '" + std::string(value) + "'",
                    line);
}

void check_rate_key(std::string_view key, double value, int line) {
  if (value < 0.0) {
    throw ConfigError(std::string(key) + ": negative rate (got " + std::to_string(value) + ")",
                      line);
  }
}

void check_loss_key(std::string_view key, double value, int line) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw ConfigError(std::string(key) + ": loss out of range (got " + std::to_string(value) + ")",
                      line);
  }
}

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

struct Entry {
  int line;
  std::string section;
  std::string key;
  std::string value;
};

void apply_entry(ExperimentConfig& c, const Entry& e) {
  const std::string_view key = e.key;
  const std::string_view value = e.value;
  const int line = e.line;
  if (e.section == "experiment") {
    if (key == "preset") return;  // handled by the caller before overrides
    if (key == "theta") { c.theta = parse_double(key, value, line); return; }
    if (key == "drive") { c.drive = parse_double(key, value, line); return; }
  } else if (e.section == "network") {
    if (key == "gamma1") { check_rate_key(key, c.gamma1 = parse_double(key, value, line), line); return; }
    if (key == "gamma2") { check_rate_key(key, c.gamma2 = parse_double(key, value, line), line); return; }
    if (key == "gamma3") { check_rate_key(key, c.gamma3 = parse_double(key, value, line), line); return; }
    if (key == "gamma4") { check_rate_key(key, c.gamma4 = parse_double(key, value, line), line); return; }
    if (key == "gamma_l") { check_rate_key(key, c.gamma_l = parse_double(key, value, line), line); return; }
    if (key == "kappa") { check_rate_key(key, c.kappa = parse_double(key, value, line), line); return; }
    if (key == "kappa_l") { check_rate_key(key, c.kappa_l = parse_double(key, value, line), line); return; }
    if (key == "plant_detuning_hz") { c.plant_detuning_hz = parse_double(key, value, line); return; }
    if (key == "detuning_hz") { c.detuning_hz = parse_double(key, value, line); return; }
    if (key == "phi") { c.phi = parse_double(key, value, line); return; }
    if (key == "l1") { check_loss_key(key, c.l1 = parse_double(key, value, line), line); return; }
    if (key == "l2") { check_loss_key(key, c.l2 = parse_double(key, value, line), line); return; }
    if (key == "l3") { check_loss_key(key, c.l3 = parse_double(key, value, line), line); return; }
    if (key == "x") { c.x = parse_double(key, value, line); return; }
    if (key == "y") { c.y = parse_double(key, value, line); return; }
  } else if (e.section == "grid") {
    if (key == "start_hz") { c.grid.start_hz = parse_double(key, value, line); return; }
    if (key == "stop_hz") { c.grid.stop_hz = parse_double(key, value, line); return; }
    if (key == "points") { c.grid.points = parse_index(key, value, line); return; }
  } else if (e.section == "output") {
    if (key == "path") { c.output.path = value; return; }
    if (key == "format") {
      if (value == "csv") { c.output.format = OutputFormat::kCsv; return; }
      if (value == "json") { c.output.format = OutputFormat::kJson; return; }
      throw ConfigError("format: expected csv or json, got '" + std::string(value) + "'", line);
    }
    if (key == "emit_plot_script") { c.output.emit_plot_script = parse_bool(key, value, line); return; }
    if (key == "include_open_loop") { c.output.include_open_loop = parse_bool(key, value, line); return; }
    if (key == "port" || key == "scan_port") {
      Index& slot = (key == "port") ? c.output.port : c.output.scan_port;
      slot = parse_index(key, value, line);
      if (slot < 0 || slot >= kNetworkPorts) {
        throw ConfigError(std::string(key) + ": out of range (got " + std::string(value) +
                              ", network has " + std::to_string(kNetworkPorts) + " ports)",
                          line);
      }
      return;
    }
  }
  throw ConfigError("unknown key '" + e.key + "' in [" + e.section + "]", line);
}

}  // namespace

std::string_view preset_name(Preset preset) {
  return kPresetNames[static_cast<int>(preset)];
}

Preset preset_from_name(std::string_view name) {
  for (int i = 0; i < static_cast<int>(std::size(kPresetNames)); ++i) {
    if (name == kPresetNames[i]) return static_cast<Preset>(i);
  }
  std::string expected;
  for (const auto& n : kPresetNames) {
    expected += expected.empty() ? std::string(n) : ", " + std::string(n);
  }
  throw ConfigError("unknown preset '" + std::string(name) + "' (expected " + expected + ")");
}

NetworkParams ExperimentConfig::network_params() const {
  NetworkParams p;
  p.gamma1 = gamma1;
  p.gamma2 = gamma2;
  p.gamma3 = gamma3;
  p.gamma4 = gamma4;
  p.gamma_l = gamma_l;
  p.kappa = kappa;
  p.kappa_l = kappa_l;
  p.plant_detuning = 2.0 * std::numbers::pi * plant_detuning_hz;
  p.controller_detuning = 2.0 * std::numbers::pi * detuning_hz;
  p.phi = phi;
  p.l1 = l1;
  p.l2 = l2;
  p.l3 = l3;
  p.x = x;
  p.y = y;
  p.theta = theta;
  p.input_amplitudes = Vector::Zero(kNetworkPorts);
  p.input_amplitudes(0) = drive;
  return p;
}

ExperimentConfig preset_config(Preset preset) {
  ExperimentConfig c;
  c.preset = preset;
  switch (preset) {
    case Preset::kOpenLoop:
      c.l1 = 1.0;
      c.l2 = 1.0;
      c.x = 0.79;
      break;
    case Preset::kEmptyCavityFeedback:
      c.x = 0.33;
      c.output.include_open_loop = true;
      break;
    case Preset::kOpoNetwork:
      c.x = 0.32;
      c.y = 0.10;
      c.output.include_open_loop = true;
      break;
    case Preset::kDetunedController:
      c.x = 0.29;
      c.detuning_hz = 16.0e6;
      c.output.include_open_loop = true;
      c.drive = 3.16227766016838e6;
      break;
    case Preset::kPhaseScan:
      c.detuning_hz = 16.0e6;
      c.drive = 3.16227766016838e6;
      break;
    case Preset::kStabilityScan:
      break;
    case Preset::kCustom:
      break;
  }
  return c;
}

ExperimentConfig parse_config(const std::string& text) {
  std::vector<Entry> entries;
  std::string section;
  int line_no = 0;
  int preset_line = 0;
  Preset preset = Preset::kCustom;
  bool preset_seen = false;

  std::istringstream stream(text);
  std::string raw;
  while (std::getline(stream, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("unterminated section header", line_no);
      const std::string name{trim(line.substr(1, line.size() - 2))};
      if (name != "experiment" && name != "network" && name != "grid" && name != "output") {
        throw ConfigError("unknown section [" + name + "]", line_no);
      }
      section = name;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("expected 'key = value', got '" + std::string(line) + "'", line_no);
    }
    if (section.empty()) throw ConfigError("key outside of any section", line_no);
    Entry e{line_no, section, std::string(trim(line.substr(0, eq))),
            std::string(trim(line.substr(eq + 1)))};
    if (e.key.empty()) throw ConfigError("empty key", line_no);
    if (section == "experiment" && e.key == "preset") {
      if (preset_seen) throw ConfigError("duplicate preset key", line_no);
      preset_seen = true;
      preset_line = line_no;
      try {
        preset = preset_from_name(e.value);
      } catch (const ConfigError& err) {
        throw ConfigError(err.what(), preset_line);
      }
    }
    entries.push_back(std::move(e));
  }

  ExperimentConfig config = preset_config(preset);
  for (const Entry& e : entries) apply_entry(config, e);
  validate_config(config);
  return config;
}

void validate_config(const ExperimentConfig& config) {
  const struct { const char* key; double value; } rates[] = {
      {"gamma1", config.gamma1}, {"gamma2", config.gamma2},   {"gamma3", config.gamma3},
      {"gamma4", config.gamma4}, {"gamma_l", config.gamma_l}, {"kappa", config.kappa},
      {"kappa_l", config.kappa_l}};
  for (const auto& r : rates) check_rate_key(r.key, r.value, 0);
  const struct { const char* key; double value; } losses[] = {
      {"l1", config.l1}, {"l2", config.l2}, {"l3", config.l3}};
  for (const auto& l : losses) check_loss_key(l.key, l.value, 0);
  const struct { const char* key; double value; } finites[] = {
      {"plant_detuning_hz", config.plant_detuning_hz},
      {"detuning_hz", config.detuning_hz},
      {"phi", config.phi},
      {"x", config.x},
      {"y", config.y},
      {"theta", config.theta},
      {"drive", config.drive},
      {"start_hz", config.grid.start_hz},
      {"stop_hz", config.grid.stop_hz}};
  for (const auto& f : finites) {
    if (!std::isfinite(f.value)) {
      throw ConfigError(std::string(f.key) + ": not finite");
    }
  }
  if (config.grid.points < 2) {
    throw ConfigError("points: need at least 2 grid points (got " +
                      std::to_string(config.grid.points) + ")");
  }
  if (!(config.grid.stop_hz > config.grid.start_hz)) {
    throw ConfigError("stop_hz: grid stop must exceed start");
  }
  if (config.output.port < 0 || config.output.port >= kNetworkPorts) {
    throw ConfigError("port: out of range (got " + std::to_string(config.output.port) + ")");
  }
  if (config.output.scan_port < 0 || config.output.scan_port >= kNetworkPorts) {
    throw ConfigError("scan_port: out of range (got " + std::to_string(config.output.scan_port) +
                      ")");
  }
}

std::string serialize_config(const ExperimentConfig& c) {
  std::string out;
  out += "[experiment]\n";
  out += "preset = " + std::string(preset_name(c.preset)) + "\n";
  out += "theta = " + format_double(c.theta) + "\n";
  out += "drive = " + format_double(c.drive) + "\n";
  out += "\n[network]\n";
  out += "gamma1 = " + format_double(c.gamma1) + "\n";
  out += "gamma2 = " + format_double(c.gamma2) + "\n";
  out += "gamma3 = " + format_double(c.gamma3) + "\n";
  out += "gamma4 = " + format_double(c.gamma4) + "\n";
  out += "gamma_l = " + format_double(c.gamma_l) + "\n";
  out += "kappa = " + format_double(c.kappa) + "\n";
  out += "kappa_l = " + format_double(c.kappa_l) + "\n";
  out += "plant_detuning_hz = " + format_double(c.plant_detuning_hz) + "\n";
  out += "detuning_hz = " + format_double(c.detuning_hz) + "\n";
  out += "phi = " + format_double(c.phi) + "\n";
  out += "l1 = " + format_double(c.l1) + "\n";
  out += "l2 = " + format_double(c.l2) + "\n";
  out += "l3 = " + format_double(c.l3) + "\n";
  out += "x = " + format_double(c.x) + "\n";
  out += "y = " + format_double(c.y) + "\n";
  out += "\n[grid]\n";
  out += "start_hz = " + format_double(c.grid.start_hz) + "\n";
  out += "stop_hz = " + format_double(c.grid.stop_hz) + "\n";
  out += "points = " + std::to_string(c.grid.points) + "\n";
  out += "\n[output]\n";
  out += "path = " + c.output.path + "\n";
  out += std::string("format = ") + (c.output.format == OutputFormat::kCsv ? "csv" : "json") + "\n";
  out += std::string("emit_plot_script = ") + (c.output.emit_plot_script ? "true" : "false") + "\n";
  out += std::string("include_open_loop = ") + (c.output.include_open_loop ? "true" : "false") +
         "\n";
  out += "port = " + std::to_string(c.output.port) + "\n";
  out += "scan_port = " + std::to_string(c.output.scan_port) + "\n";
  return out;
}

}  // namespace slh
