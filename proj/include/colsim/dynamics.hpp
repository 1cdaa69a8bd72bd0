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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "colsim/model.hpp"

namespace colsim {

/// Which single-photon sector pairs with the ancilla.
enum class Sector { System, Environment };

struct PostSelected {
  CMatrix rho;    // 4×4, trace 1, ordered ancilla ⊗ {H, V}
  double weight;  // trace of the block before normalisation
};

/// Ancilla ⊗ {S_H, S_V} (or {E_H, E_V}) block, renormalised. Throws
/// EmptySector when its weight is below 1e-12.
PostSelected post_select(const JointState& state, Sector sector);

/// Wootters concurrence of a two-qubit density matrix, from the singular
/// values of τ = Wᵀ(σy⊗σy)W with ρ = WW†. Accurate to ~1e-15 even for pure
/// states, where the spectral route loses half the digits.
double concurrence(const CMatrix& rho);

/// Same quantity through the eigenvalues of ρ(σy⊗σy)ρ*(σy⊗σy). Kept as an
/// independent cross-check.
double concurrence_spectral(const CMatrix& rho);

struct StepRecord {
  std::size_t k = 0;
  JointState joint;
  std::optional<PostSelected> as;  // empty when the sector is empty
  std::optional<PostSelected> ae;
  std::optional<double> c_as;
  std::optional<double> c_ae;
  double purity_joint = 1.0;
};

struct Trajectory {
  std::vector<StepRecord> records;  // records[0] is the input
  StepConfig config;
  std::optional<InputSpec> input;
};

/// Stroboscopic evolution: the same step channel applied `steps` times.
Trajectory evolve(const JointState& input, const StepConfig& cfg, std::size_t steps);
Trajectory evolve(const InputSpec& input, const StepConfig& cfg, std::size_t steps);

struct Increment {
  std::size_t k;
  double delta;
};

struct NMResult {
  double value = 0.0;
  std::vector<Increment> increments;
};

/// Σ_k max(0, C_k − C_{k−1}), counting only increments above 1e-12.
NMResult nm_measure(std::span<const double> concurrences);

/// Same sum over a trajectory's sector concurrence. Steps with an empty
/// sector are skipped; the next defined step is compared with the last one.
NMResult nm_measure(const Trajectory& trajectory, Sector sector = Sector::System);

/// Running value of nm_measure at each step of a trajectory.
std::vector<double> nm_cumulative(const Trajectory& trajectory, Sector sector = Sector::System);

struct SweepGrid {
  std::vector<double> transmissivities;
  std::vector<double> phases;
};

struct SweepRow {
  double T;
  double theta;
  std::size_t step;
  std::optional<double> c_as;
  std::optional<double> c_ae;
  double n_cumulative;
};

/// Evolves every (T, θ) point of the grid, all other step parameters taken
/// from `base`. Rows come back in lexicographic (T, θ, step) order. Grid
/// points run in parallel under OpenMP.
std::vector<SweepRow> sweep(const InputSpec& input, const SweepGrid& grid, const StepConfig& base,
                            std::size_t steps);

/// Single-threaded reference for sweep(); results are bit-identical.
std::vector<SweepRow> sweep_serial(const InputSpec& input, const SweepGrid& grid, const StepConfig& base,
                                   std::size_t steps);

}  // namespace colsim
