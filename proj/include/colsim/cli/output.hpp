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

#include <optional>
#include <string>

#include "colsim/cli/run_config.hpp"
#include "colsim/dynamics.hpp"
#include "colsim/tomography.hpp"

namespace colsim::cli {

/// printf-style %.{digits}g with "-0" normalised to "0".
std::string format_sig(double value, int digits = 12);

/// Value rounded to `digits` significant digits (what the text shows).
double round_sig(double value, int digits = 12);

std::string render_evolve(const RunConfig& cfg, const Trajectory& traj);
std::string render_sweep(const RunConfig& cfg, const std::vector<SweepRow>& rows);

struct TomoStep {
  std::size_t step;
  std::optional<double> c_true;
  std::optional<TomographyResult> result;
};
std::string render_tomo(const RunConfig& cfg, const std::vector<TomoStep>& steps);

std::string render_nm(const RunConfig& cfg, const NMResult& nm);

}  // namespace colsim::cli
