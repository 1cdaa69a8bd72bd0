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
#include <cstdint>
#include <vector>

#include "colsim/model.hpp"

namespace colsim::oracle {

/// Frozen mode order: bit j of a basis index is the occupation of mode j.
/// Absorber modes are appended after these six, one fresh set per step.
enum Mode : std::size_t { kAncillaH = 0, kAncillaV, kSystemH, kSystemV, kEnvH, kEnvV, kFixedModes };

inline constexpr std::size_t kMaxSteps = 4;
inline constexpr std::size_t kMaxModes = 22;

/// Pure state over occupation-truncated (0/1) bosonic modes. Operators act
/// on mode pairs the way the optical elements act on creation operators.
class FockState {
 public:
  explicit FockState(std::size_t modes);

  std::size_t modes() const { return modes_; }
  std::size_t dim() const { return amplitudes_.size(); }
  const std::vector<Complex>& amplitudes() const { return amplitudes_; }

  void set(std::uint64_t basis_index, Complex amplitude);

  /// Appends a vacuum mode and returns its index. Throws CapacityError past
  /// kMaxModes.
  std::size_t add_mode();

  /// One photon in `a` ↔ one photon in `b`:
  /// |1,0⟩ → i√r|1,0⟩ + √(1−r)|0,1⟩,  |0,1⟩ → i√r|0,1⟩ + √(1−r)|1,0⟩.
  void beam_splitter(std::size_t a, std::size_t b, double r);

  /// Multiplies every component with `mode` occupied by `factor`.
  void mode_phase(std::size_t mode, Complex factor);

  /// e^{iθ} on components with the system occupied and the environment empty.
  void interference_phase(double theta);

  /// Partial transfer into a fresh (empty) mode:
  /// |1⟩_from|0⟩_to → √t|1,0⟩ + √(1−t)|0,1⟩.
  void attenuate(std::size_t from, std::size_t to, double transmission);

  double norm() const;

  /// Largest amplitude on a component that does not hold exactly one
  /// ancilla photon and exactly one photon elsewhere.
  double photon_number_violation() const;

  /// Reduced density matrix in the compact 10-dimensional basis, tracing
  /// out every absorber mode.
  CMatrix reduce() const;

 private:
  std::size_t modes_;
  std::vector<Complex> amplitudes_;
};

/// Initial pure states as mode occupations.
FockState bell_fock(BellSign sign);
FockState product_fock(Pol ancilla, Pol system);

/// Applies `steps` collision steps, each with fresh absorber modes for the
/// filter (always) and for parasitic loss (only when η < 1).
void run_steps(FockState& state, const StepConfig& cfg, std::size_t steps);

/// Full-Fock evolution reduced to the compact JointState basis. Werner
/// inputs run as four weighted pure states. Throws CapacityError for
/// steps > 4 or when the mode register would exceed kMaxModes.
JointState simulate_fock(const InputSpec& input, const StepConfig& cfg, std::size_t steps);

/// Trace distance between the compact-model state after `steps` and the
/// full-Fock reduced state.
double compare(const InputSpec& input, const StepConfig& cfg, std::size_t steps);

}  // namespace colsim::oracle
