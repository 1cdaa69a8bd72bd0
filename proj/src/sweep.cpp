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

#include <cstdio>
#include <exception>
#include <string>

#include "colsim/dynamics.hpp"
#include "colsim/errors.hpp"

namespace colsim {
namespace {

struct GridPoint {
  double T;
  double theta;
};

std::vector<GridPoint> expand(const SweepGrid& grid) {
  if (grid.transmissivities.empty() || grid.phases.empty()) throw InvalidInput("sweep: grid must not be empty");
  std::vector<GridPoint> points;
  points.reserve(grid.transmissivities.size() * grid.phases.size());
  for (double t : grid.transmissivities)
    for (double theta : grid.phases) points.push_back({t, theta});
  return points;
}

std::vector<SweepRow> run_point(const InputSpec& input, const StepConfig& base, GridPoint point,
                                std::size_t steps) {
  StepConfig cfg = base;
  cfg.T = point.T;
  cfg.theta = point.theta;
  const Trajectory traj = evolve(input, cfg, steps);
  const std::vector<double> n_cum = nm_cumulative(traj);
  std::vector<SweepRow> rows;
  rows.reserve(traj.records.size());
  for (const auto& rec : traj.records)
    rows.push_back({point.T, point.theta, rec.k, rec.c_as, rec.c_ae, n_cum[rec.k]});
  return rows;
}

[[noreturn]] void rethrow_for_point(const std::exception_ptr& error, GridPoint point) {
  char where[96];
  std::snprintf(where, sizeof where, "sweep point T=%.12g theta=%.12g: ", point.T, point.theta);
  try {
    std::rethrow_exception(error);
  } catch (const InvalidInput& e) {
    throw InvalidInput(where + std::string(e.what()));
  } catch (const NumericalError& e) {
    throw NumericalError(where + std::string(e.what()));
  }
}

std::vector<SweepRow> flatten(std::vector<std::vector<SweepRow>>& per_point) {
  std::vector<SweepRow> rows;
  for (auto& block : per_point) rows.insert(rows.end(), block.begin(), block.end());
  return rows;
}

}  // namespace

std::vector<SweepRow> sweep_serial(const InputSpec& input, const SweepGrid& grid, const StepConfig& base,
                                   std::size_t steps) {
  const auto points = expand(grid);
  std::vector<std::vector<SweepRow>> per_point(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    try {
      per_point[i] = run_point(input, base, points[i], steps);
    } catch (...) {
      rethrow_for_point(std::current_exception(), points[i]);
    }
  }
  return flatten(per_point);
}

std::vector<SweepRow> sweep(const InputSpec& input, const SweepGrid& grid, const StepConfig& base,
                            std::size_t steps) {
  const auto points = expand(grid);
  const auto n = static_cast<std::ptrdiff_t>(points.size());
  std::vector<std::vector<SweepRow>> per_point(points.size());
  std::vector<std::exception_ptr> errors(points.size());

#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      per_point[i] = run_point(input, base, points[i], steps);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }

  for (std::size_t i = 0; i < points.size(); ++i)
    if (errors[i]) rethrow_for_point(errors[i], points[i]);
  return flatten(per_point);
}

}  // namespace colsim
