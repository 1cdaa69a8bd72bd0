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

#include "colsim/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "colsim/errors.hpp"
#include "colsim/tolerances.hpp"

namespace colsim {
namespace {

// σy ⊗ σy is real: anti-diagonal (−1, 1, 1, −1).
CMatrix spin_flip() {
  CMatrix y(4, 4);
  y(0, 3) = -1.0;
  y(1, 2) = 1.0;
  y(2, 1) = 1.0;
  y(3, 0) = -1.0;
  return y;
}

void require_two_qubit_state(const CMatrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) throw InvalidInput("concurrence: expected a 4x4 density matrix");
  if (density_violation(rho) > tol::kDensityTrace) throw InvalidInput("concurrence: not a valid density matrix");
}

double wootters(std::vector<double> lambdas) {
  std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
  return std::max(0.0, lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]);
}

StepRecord make_record(std::size_t k, JointState joint) {
  StepRecord rec{k, std::move(joint), std::nullopt, std::nullopt, std::nullopt, std::nullopt, 1.0};
  rec.purity_joint = purity(rec.joint.matrix());
  try {
    rec.as = post_select(rec.joint, Sector::System);
    rec.c_as = concurrence(rec.as->rho);
  } catch (const EmptySector&) {
  }
  try {
    rec.ae = post_select(rec.joint, Sector::Environment);
    rec.c_ae = concurrence(rec.ae->rho);
  } catch (const EmptySector&) {
  }
  return rec;
}

const std::optional<double>& sector_concurrence(const StepRecord& rec, Sector sector) {
  return sector == Sector::System ? rec.c_as : rec.c_ae;
}

}  // namespace

PostSelected post_select(const JointState& state, Sector sector) {
  const Arm h = sector == Sector::System ? Arm::SH : Arm::EH;
  const Arm v = sector == Sector::System ? Arm::SV : Arm::EV;
  const std::size_t rows[4] = {joint_index(Pol::H, h), joint_index(Pol::H, v), joint_index(Pol::V, h),
                               joint_index(Pol::V, v)};
  CMatrix block(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) block(i, j) = state.matrix()(rows[i], rows[j]);
  const double weight = block.trace().real();
  if (weight < tol::kEmptySector)
    throw EmptySector(sector == Sector::System ? "system sector is empty" : "environment sector is empty");
  block *= 1.0 / weight;
  return {std::move(block), weight};
}

double concurrence(const CMatrix& rho) {
  require_two_qubit_state(rho);
  const auto spectrum = eig_hermitian(rho, true);
  CMatrix w = *spectrum.vectors;
  for (std::size_t j = 0; j < 4; ++j) {
    const double scale = std::sqrt(std::max(0.0, spectrum.values[j]));
    for (std::size_t i = 0; i < 4; ++i) w(i, j) *= scale;
  }
  const CMatrix tau = w.transpose() * spin_flip() * w;
  return wootters(singular_values(tau));
}

double concurrence_spectral(const CMatrix& rho) {
  require_two_qubit_state(rho);
  const CMatrix y = spin_flip();
  const CMatrix product = rho * y * rho.conjugate() * y;
  std::vector<double> lambdas;
  for (const Complex& mu : eig_general4(product)) {
    double re = mu.real();
    if (re < -tol::kSpectrumClamp) throw InvalidInput("concurrence: spin-flip spectrum has a negative eigenvalue");
    lambdas.push_back(std::sqrt(std::max(0.0, re)));
  }
  return wootters(std::move(lambdas));
}

Trajectory evolve(const JointState& input, const StepConfig& cfg, std::size_t steps) {
  if (steps < 1) throw InvalidInput("evolve: steps must be at least 1");
  const KrausChannel channel = step_channel(cfg);
  Trajectory traj{{}, cfg, std::nullopt};
  traj.records.reserve(steps + 1);
  traj.records.push_back(make_record(0, input));
  for (std::size_t k = 1; k <= steps; ++k)
    traj.records.push_back(make_record(k, apply_channel(channel, traj.records.back().joint)));
  return traj;
}

Trajectory evolve(const InputSpec& input, const StepConfig& cfg, std::size_t steps) {
  Trajectory traj = evolve(make_input(input), cfg, steps);
  traj.input = input;
  return traj;
}

NMResult nm_measure(std::span<const double> concurrences) {
  if (concurrences.size() < 2) throw InvalidInput("nm_measure: need at least two concurrence values");
  NMResult out;
  for (std::size_t k = 1; k < concurrences.size(); ++k) {
    const double delta = concurrences[k] - concurrences[k - 1];
    if (delta > tol::kIncrement) {
      out.value += delta;
      out.increments.push_back({k, delta});
    }
  }
  return out;
}

NMResult nm_measure(const Trajectory& trajectory, Sector sector) {
  NMResult out;
  std::optional<double> last;
  for (const auto& rec : trajectory.records) {
    const auto& c = sector_concurrence(rec, sector);
    if (!c) continue;
    if (last && *c - *last > tol::kIncrement) {
      out.value += *c - *last;
      out.increments.push_back({rec.k, *c - *last});
    }
    last = c;
  }
  return out;
}

std::vector<double> nm_cumulative(const Trajectory& trajectory, Sector sector) {
  std::vector<double> out;
  out.reserve(trajectory.records.size());
  double running = 0.0;
  std::optional<double> last;
  for (const auto& rec : trajectory.records) {
    const auto& c = sector_concurrence(rec, sector);
    if (c) {
      if (last && *c - *last > tol::kIncrement) running += *c - *last;
      last = c;
    }
    out.push_back(running);
  }
  return out;
}

}  // namespace colsim
