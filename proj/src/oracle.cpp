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

#include "colsim/oracle.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "colsim/dynamics.hpp"
#include "colsim/errors.hpp"

namespace colsim::oracle {
namespace {

constexpr std::uint64_t bit(std::size_t mode) { return std::uint64_t{1} << mode; }

constexpr std::uint64_t kAncillaMask = bit(kAncillaH) | bit(kAncillaV);
constexpr std::uint64_t kArmMask = bit(kSystemH) | bit(kSystemV) | bit(kEnvH) | bit(kEnvV);

std::size_t absorbers_per_step(const StepConfig& cfg) {
  return 2 + (cfg.eta_s < 1.0 ? 2 : 0) + (cfg.eta_e < 1.0 ? 2 : 0);
}

}  // namespace

FockState::FockState(std::size_t modes) : modes_(modes) {
  if (modes > kMaxModes) throw CapacityError("Fock register limited to 22 modes");
  amplitudes_.assign(std::size_t{1} << modes, Complex{});
}

void FockState::set(std::uint64_t basis_index, Complex amplitude) {
  if (basis_index >= amplitudes_.size()) throw InvalidInput("Fock basis index out of range");
  amplitudes_[basis_index] = amplitude;
}

std::size_t FockState::add_mode() {
  if (modes_ + 1 > kMaxModes) throw CapacityError("Fock register limited to 22 modes");
  amplitudes_.resize(amplitudes_.size() * 2, Complex{});
  return modes_++;
}

void FockState::beam_splitter(std::size_t a, std::size_t b, double r) {
  const Complex reflect{0.0, std::sqrt(r)};
  const double transmit = std::sqrt(1.0 - r);
  for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
    if ((i & bit(a)) == 0 || (i & bit(b)) != 0) continue;
    const std::uint64_t j = (i & ~bit(a)) | bit(b);
    const Complex x = amplitudes_[i];
    const Complex y = amplitudes_[j];
    amplitudes_[i] = reflect * x + transmit * y;
    amplitudes_[j] = transmit * x + reflect * y;
  }
}

void FockState::mode_phase(std::size_t mode, Complex factor) {
  for (std::uint64_t i = 0; i < amplitudes_.size(); ++i)
    if (i & bit(mode)) amplitudes_[i] *= factor;
}

void FockState::interference_phase(double theta) {
  const Complex factor = std::polar(1.0, theta);
  const std::uint64_t system = bit(kSystemH) | bit(kSystemV);
  const std::uint64_t env = bit(kEnvH) | bit(kEnvV);
  for (std::uint64_t i = 0; i < amplitudes_.size(); ++i)
    if ((i & system) != 0 && (i & env) == 0) amplitudes_[i] *= factor;
}

void FockState::attenuate(std::size_t from, std::size_t to, double transmission) {
  const double keep = std::sqrt(transmission);
  const double lose = std::sqrt(1.0 - transmission);
  for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
    if ((i & bit(from)) == 0 || (i & bit(to)) != 0) continue;
    const std::uint64_t j = (i & ~bit(from)) | bit(to);
    if (amplitudes_[j] != Complex{}) throw InvalidInput("attenuate: target mode is not fresh vacuum");
    amplitudes_[j] = lose * amplitudes_[i];
    amplitudes_[i] *= keep;
  }
}

double FockState::norm() const {
  double s = 0.0;
  for (const auto& z : amplitudes_) s += std::norm(z);
  return std::sqrt(s);
}

double FockState::photon_number_violation() const {
  double worst = 0.0;
  for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
    const bool ok = std::popcount(i & kAncillaMask) == 1 && std::popcount(i & ~kAncillaMask) == 1;
    if (!ok) worst = std::max(worst, std::abs(amplitudes_[i]));
  }
  return worst;
}

CMatrix FockState::reduce() const {
  // Components sharing one absorber configuration add coherently; different
  // configurations are orthogonal and add as a mixture.
  const std::size_t env_configs = amplitudes_.size() >> kFixedModes;
  std::vector<std::vector<Complex>> buckets(env_configs);
  for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
    const Complex amp = amplitudes_[i];
    if (amp == Complex{}) continue;
    const std::uint64_t anc = i & kAncillaMask;
    const std::uint64_t arm = i & kArmMask;
    if (std::popcount(anc) != 1 || std::popcount(arm) > 1)
      throw NumericalError("Fock component outside the one-ancilla one-arm-photon sector");
    const Pol a = anc == bit(kAncillaH) ? Pol::H : Pol::V;
    Arm arm_state = Arm::Vac;
    if (arm == bit(kSystemH)) arm_state = Arm::SH;
    if (arm == bit(kSystemV)) arm_state = Arm::SV;
    if (arm == bit(kEnvH)) arm_state = Arm::EH;
    if (arm == bit(kEnvV)) arm_state = Arm::EV;
    auto& v = buckets[i >> kFixedModes];
    if (v.empty()) v.assign(kJointDim, Complex{});
    v[joint_index(a, arm_state)] += amp;
  }
  CMatrix rho(kJointDim, kJointDim);
  for (const auto& v : buckets)
    if (!v.empty()) rho += CMatrix::outer(v);
  return rho;
}

FockState bell_fock(BellSign sign) {
  FockState s(kFixedModes);
  const double amp = std::numbers::sqrt2 / 2.0;
  s.set(bit(kAncillaH) | bit(kSystemV), amp);
  s.set(bit(kAncillaV) | bit(kSystemH), sign == BellSign::Plus ? amp : -amp);
  return s;
}

FockState product_fock(Pol ancilla, Pol system) {
  FockState s(kFixedModes);
  s.set(bit(ancilla == Pol::H ? kAncillaH : kAncillaV) | bit(system == Pol::H ? kSystemH : kSystemV), 1.0);
  return s;
}

void run_steps(FockState& state, const StepConfig& cfg, std::size_t steps) {
  cfg.validate();
  if (steps > kMaxSteps) throw CapacityError("Fock oracle supports at most 4 steps");
  if (state.modes() + steps * absorbers_per_step(cfg) > kMaxModes)
    throw CapacityError("Fock oracle: absorber modes for this configuration exceed the register");
  const double theta = cfg.theta;
  for (std::size_t k = 0; k < steps; ++k) {
    state.beam_splitter(kSystemH, kEnvH, cfg.r);
    state.beam_splitter(kSystemV, kEnvV, cfg.r);
    state.mode_phase(kSystemV, Complex{0.0, 1.0});  // quarter-wave plate on the system
    state.mode_phase(kEnvV, -1.0);                  // half-wave plate on the environment
    state.interference_phase(theta);
    for (std::size_t env : {std::size_t{kEnvH}, std::size_t{kEnvV}}) state.attenuate(env, state.add_mode(), cfg.T);
    if (cfg.eta_s < 1.0)
      for (std::size_t m : {std::size_t{kSystemH}, std::size_t{kSystemV}})
        state.attenuate(m, state.add_mode(), cfg.eta_s);
    if (cfg.eta_e < 1.0)
      for (std::size_t m : {std::size_t{kEnvH}, std::size_t{kEnvV}}) state.attenuate(m, state.add_mode(), cfg.eta_e);
  }
}

JointState simulate_fock(const InputSpec& input, const StepConfig& cfg, std::size_t steps) {
  if (steps > kMaxSteps) throw CapacityError("Fock oracle supports at most 4 steps");
  struct Run {
    double weight;
    FockState state;
  };
  std::vector<Run> runs;
  if (input.kind == InputSpec::Kind::Bell) {
    runs.push_back({1.0, bell_fock(input.sign)});
  } else {
    // Identity on the 4-dim block = |Ψ⁺⟩⟨Ψ⁺| + |Ψ⁻⟩⟨Ψ⁻| + |HH⟩⟨HH| + |VV⟩⟨VV|.
    const double p = (4.0 * input.fidelity - 1.0) / 3.0;
    const double q = (1.0 - input.fidelity) / 3.0;
    runs.push_back({p + q, bell_fock(BellSign::Plus)});
    runs.push_back({q, bell_fock(BellSign::Minus)});
    runs.push_back({q, product_fock(Pol::H, Pol::H)});
    runs.push_back({q, product_fock(Pol::V, Pol::V)});
  }
  CMatrix rho(kJointDim, kJointDim);
  for (auto& run : runs) {
    if (run.weight == 0.0) continue;
    run_steps(run.state, cfg, steps);
    rho += run.weight * run.state.reduce();
  }
  return JointState::from_matrix(std::move(rho));
}

double compare(const InputSpec& input, const StepConfig& cfg, std::size_t steps) {
  const JointState reference = simulate_fock(input, cfg, steps);
  const JointState compact = steps == 0 ? make_input(input) : evolve(input, cfg, steps).records.back().joint;
  return trace_distance(compact.matrix(), reference.matrix());
}

}  // namespace colsim::oracle
