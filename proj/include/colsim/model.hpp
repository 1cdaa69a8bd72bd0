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
#include <string>
#include <vector>

#include "colsim/complex_matrix.hpp"
#include "colsim/linalg.hpp"

namespace colsim {

/// Single-photon arm basis. The order is frozen: every matrix in the
/// project indexes the arm this way.
enum class Arm : std::size_t {
  SH = 0,   // photon in the system mode, H
  SV = 1,   // photon in the system mode, V
  EH = 2,   // photon in the retained environment mode, H
  EV = 3,   // photon in the retained environment mode, V
  Vac = 4,  // photon absorbed or lost
};

enum class Pol : std::size_t { H = 0, V = 1 };

inline constexpr std::size_t kAncillaDim = 2;
inline constexpr std::size_t kArmDim = 5;
inline constexpr std::size_t kJointDim = kAncillaDim * kArmDim;
inline constexpr BipartiteDims kJointDims{kAncillaDim, kArmDim};

/// Row/column of |ancilla⟩ ⊗ |arm⟩ in a joint operator.
constexpr std::size_t joint_index(Pol ancilla, Arm arm) {
  return static_cast<std::size_t>(ancilla) * kArmDim + static_cast<std::size_t>(arm);
}

enum class BellSign { Plus, Minus };

/// Density matrix on ancilla ⊗ arm (10×10), Hermitian, PSD and unit trace.
class JointState {
 public:
  /// Checks all three invariants; throws InvalidInput on violation.
  static JointState from_matrix(CMatrix rho);

  const CMatrix& matrix() const { return rho_; }

 private:
  explicit JointState(CMatrix rho) : rho_(std::move(rho)) {}
  CMatrix rho_;
};

/// Largest density-matrix invariant violation of a square matrix: the max of
/// ‖ρ − ρ†‖_max, |Tr ρ − 1| and −λ_min.
double density_violation(const CMatrix& rho);

/// Per-step optical parameters.
struct StepConfig {
  double r = 0.5;      // beam-splitter reflectivity
  double T = 1.0;      // filter transmissivity: the environment-memory knob
  double theta = 0.0;  // interference phase, radians
  double eta_s = 1.0;  // parasitic transmission of the system arm
  double eta_e = 1.0;  // parasitic transmission of the environment arm

  /// Throws InvalidInput when a field leaves its range.
  void validate() const;
};

/// Completely positive trace-preserving map ρ → Σ K ρ K†.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<CMatrix> operators);

  const std::vector<CMatrix>& operators() const { return ops_; }
  std::size_t size() const { return ops_.size(); }
  std::size_t dim() const { return ops_.front().rows(); }

  /// ‖Σ K†K − I‖_max.
  double completeness_error() const;

  /// Channel that applies `first`, then `second`. Exactly-zero products drop out.
  static KrausChannel compose(const KrausChannel& second, const KrausChannel& first);

 private:
  std::vector<CMatrix> ops_;
};

/// Where parasitic loss acts.
enum class LossTarget { SystemArm, EnvironmentArm, Both };

/// Input-state descriptor shared by the dynamics, oracle and CLI layers.
struct InputSpec {
  enum class Kind { Bell, Werner };
  Kind kind = Kind::Bell;
  BellSign sign = BellSign::Plus;
  double fidelity = 1.0;  // Werner only

  static InputSpec bell(BellSign s) { return {Kind::Bell, s, 1.0}; }
  static InputSpec werner(double f) { return {Kind::Werner, BellSign::Plus, f}; }

  /// "bell+", "bell-" or "werner:<F>".
  static InputSpec parse(const std::string& text);
  std::string to_string() const;
};

/// (|H⟩_a|S_V⟩ ± |V⟩_a|S_H⟩)/√2 as a 10-vector.
std::vector<Complex> bell_vector(BellSign sign);

JointState bell_state(BellSign sign);

/// ((4F−1)/3)|Ψ⁺⟩⟨Ψ⁺| + ((1−F)/3)·I on the ancilla ⊗ {S_H, S_V} block.
JointState werner_state(double fidelity);

JointState make_input(const InputSpec& spec);

CMatrix bs_unitary(double r);
CMatrix qwp_unitary();
CMatrix hwp_unitary();
CMatrix phase_unitary(double theta);

KrausChannel filter_channel(double transmissivity);
KrausChannel loss_channel(double eta, LossTarget target);

/// One collision step: beam splitter, quarter-wave plate (system), half-wave
/// plate (environment), phase, then the filter and parasitic losses.
KrausChannel step_channel(const StepConfig& cfg);

/// Σ K ρ K†; the result is checked against the JointState invariants and a
/// violation raises NumericalError.
JointState apply_channel(const KrausChannel& channel, const JointState& state);

/// Reduced state of the ancilla (2×2) or the arm (5×5).
CMatrix reduce_to_ancilla(const JointState& state);
CMatrix reduce_to_arm(const JointState& state);

}  // namespace colsim
