// Copyright 2026 The colsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "colsim/cli/run_config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <set>

#include "json.hpp"

namespace colsim::cli {
namespace {

const std::set<std::string> kKnownKeys{"input", "steps", "r",    "T",      "theta",  "eta-s", "eta-e",
                                       "shots", "mc",    "seed", "sector", "output", "format"};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start)));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_number(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (t.empty() || used != t.size() || !std::isfinite(v))
    throw ConfigError("invalid " + what + ": '" + text + "'");
  return v;
}

std::uint64_t parse_count(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
    throw ConfigError("invalid " + what + ": '" + text + "' (expected a non-negative integer)");
  try {
    return std::stoull(t);
  } catch (const std::exception&) {
    throw ConfigError("invalid " + what + ": '" + text + "'");
  }
}

std::string get(const RawOptions& raw, const std::string& key, const std::string& fallback) {
  const auto it = raw.find(key);
  return it == raw.end() ? fallback : it->second;
}

std::string json_scalar(const nlohmann::json& v, const std::string& key) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
    return buf;
  }
  throw ConfigError("config key '" + key + "' must be a string or number");
}

}  // namespace

std::string to_string(Command c) {
  switch (c) {
    case Command::Evolve: return "evolve";
    case Command::Sweep: return "sweep";
    case Command::Tomo: return "tomo";
    case Command::Nm: return "nm";
    case Command::VerifyOracle: return "verify-oracle";
  }
  return "evolve";
}

double parse_angle(const std::string& text) {
  std::string t = trim(text);
  double sign = 1.0;
  if (t.starts_with('-')) {
    sign = -1.0;
    t = trim(t.substr(1));
  }
  if (t == "pi") return sign * std::numbers::pi;
  if (t == "pi/2") return sign * std::numbers::pi / 2.0;
  if (t == "pi/4") return sign * std::numbers::pi / 4.0;
  return sign * parse_number(t, "angle");
}

std::vector<double> parse_grid(const std::string& text, bool angles) {
  const auto value = [&](const std::string& s) { return angles ? parse_angle(s) : parse_number(s, "value"); };
  if (trim(text).empty()) throw ConfigError("grid must not be empty");
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw ConfigError("range must be start:stop:count, got '" + text + "'");
    const double start = value(parts[0]);
    const double stop = value(parts[1]);
    const std::uint64_t count = parse_count(parts[2], "range count");
    if (count < 1) throw ConfigError("range count must be at least 1");
    std::vector<double> out(count);
    for (std::uint64_t i = 0; i < count; ++i)
      out[i] = count == 1 ? start : start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1);
    return out;
  }
  std::vector<double> out;
  for (const auto& item : split(text, ',')) {
    if (item.empty()) throw ConfigError("empty entry in list '" + text + "'");
    out.push_back(value(item));
  }
  return out;
}

RunConfig build_config(Command command, const RawOptions& raw) {
  for (const auto& [key, _] : raw)
    if (!kKnownKeys.contains(key)) throw ConfigError("unknown option '" + key + "'");

  RunConfig cfg;
  cfg.command = command;
  try {
    cfg.input = InputSpec::parse(trim(get(raw, "input", "bell+")));
  } catch (const InvalidInput& e) {
    throw ConfigError(e.what());
  }

  cfg.steps = parse_count(get(raw, "steps", "6"), "steps");
  if (cfg.steps < 1) throw ConfigError("steps must be at least 1");
  if (command == Command::VerifyOracle && cfg.steps > 4) throw ConfigError("verify-oracle supports at most 4 steps");

  cfg.step.r = parse_number(get(raw, "r", "0.5"), "r");
  cfg.step.eta_s = parse_number(get(raw, "eta-s", "1"), "eta-s");
  cfg.step.eta_e = parse_number(get(raw, "eta-e", "1"), "eta-e");
  cfg.grid.transmissivities = parse_grid(get(raw, "T", "1"), false);
  cfg.grid.phases = parse_grid(get(raw, "theta", "0"), true);
  if (command != Command::Sweep && (cfg.grid.transmissivities.size() != 1 || cfg.grid.phases.size() != 1))
    throw ConfigError(to_string(command) + " takes a single T and theta; use sweep for grids");
  cfg.step.T = cfg.grid.transmissivities.front();
  cfg.step.theta = cfg.grid.phases.front();
  try {
    for (double t : cfg.grid.transmissivities) {
      StepConfig probe = cfg.step;
      probe.T = t;
      probe.validate();
    }
  } catch (const InvalidInput& e) {
    throw ConfigError(e.what());
  }

  cfg.shots = parse_count(get(raw, "shots", "10000"), "shots");
  if (cfg.shots < 1) throw ConfigError("shots must be at least 1");
  cfg.mc_runs = parse_count(get(raw, "mc", "100"), "mc");
  if (cfg.mc_runs < 2) throw ConfigError("mc must be at least 2");
  cfg.seed = parse_count(get(raw, "seed", "0"), "seed");

  const std::string sector = trim(get(raw, "sector", "s"));
  if (sector == "s") {
    cfg.sector = Sector::System;
  } else if (sector == "e") {
    cfg.sector = Sector::Environment;
  } else {
    throw ConfigError("sector must be 's' or 'e'");
  }

  const std::string format = trim(get(raw, "format", "csv"));
  if (format == "csv") {
    cfg.format = Format::Csv;
  } else if (format == "json") {
    cfg.format = Format::Json;
  } else {
    throw ConfigError("format must be 'csv' or 'json'");
  }

  if (const auto it = raw.find("output"); it != raw.end()) {
    if (trim(it->second).empty()) throw ConfigError("output path must not be empty");
    cfg.output = it->second;
  }
  return cfg;
}

void merge_config_file(const std::string& path, RawOptions& raw) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config file '" + path + "': " + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config file must hold a JSON object");
  for (const auto& [name, value] : doc.items()) {
    std::string key = name;
    for (auto& ch : key)
      if (ch == '_') ch = '-';
    if (raw.contains(key)) continue;
    if (value.is_array()) {
      std::string joined;
      for (const auto& item : value) joined += (joined.empty() ? "" : ",") + json_scalar(item, key);
      raw[key] = joined;
    } else {
      raw[key] = json_scalar(value, key);
    }
  }
}

}  // namespace colsim::cli
