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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "colsim/dynamics.hpp"
#include "colsim/errors.hpp"
#include "colsim/model.hpp"

namespace colsim::cli {

enum class Command { Evolve, Sweep, Tomo, Nm, VerifyOracle };
enum class Format { Csv, Json };

std::string to_string(Command c);

/// Fully validated configuration for one CLI invocation.
struct RunConfig {
  Command command = Command::Evolve;
  InputSpec input = InputSpec::bell(BellSign::Plus);
  std::size_t steps = 6;
  StepConfig step;  // T and theta hold the first grid value
  SweepGrid grid;   // sweep only; single-valued otherwise
  std::uint64_t shots = 10000;
  std::size_t mc_runs = 100;
  std::uint64_t seed = 0;
  Sector sector = Sector::System;
  std::optional<std::string> output;
  Format format = Format::Csv;
};

class ConfigError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Radians, or one of the tokens pi, pi/2, pi/4 (optionally negated).
double parse_angle(const std::string& text);

/// Comma-separated list, or start:stop:count with inclusive endpoints.
std::vector<double> parse_grid(const std::string& text, bool angles);

/// Raw option values keyed by long flag name (without dashes), after
/// merging a JSON config file underneath the command-line flags.
using RawOptions = std::map<std::string, std::string>;

/// Converts raw strings into a checked RunConfig. Throws ConfigError.
RunConfig build_config(Command command, const RawOptions& raw);

/// Adds entries from a JSON object (keys mirror flag names) for every key
/// not already present in `raw`.
void merge_config_file(const std::string& path, RawOptions& raw);

}  // namespace colsim::cli
