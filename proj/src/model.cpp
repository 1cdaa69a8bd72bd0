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

#include "colsim/model.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>
#include <string_view>

#include "colsim/errors.hpp"
#include "colsim/tolerances.hpp"

namespace colsim {
namespace {

constexpr Complex kI{0.0, 1.0};

std::size_t idx(Arm a) { return static_cast<std::size_t>(a); }

void require_unit_interval(double x, const char* name) {
  if (!(x >= -tol::kParameterSlack && x <= 1.0 + tol::kParameterSlack))
    throw InvalidInput(std::string(name) + " must lie in [0, 1]");
}

double clamp_unit(double x) { return std::min(1.0, std::max(0.0, x)); }

// Lifts an arm operator to I_ancilla ⊗ arm_op.
CMatrix on_arm(const CMatrix& arm_op) { return tensor(CMatrix::identity(kAncillaDim), arm_op); }

CMatrix arm_diagonal(std::array<Complex, kArmDim> d) { return CMatrix::diagonal(d); }

// √(1−x)|VAC⟩⟨from| on the arm.
CMatrix absorb(Arm from, double amplitude) {
  CMatrix k(kArmDim, kArmDim);
  k(idx(Arm::Vac), idx(from)) = amplitude;
  return on_arm(k);
}

}  // namespace

double density_violation(const CMatrix& rho) {
  if (!rho.is_square()) throw InvalidInput("density matrix must be square");
  if (!rho.all_finite()) return std::numeric_limits<double>::infinity();
  const double herm = rho.hermiticity_error();
  const double trace = std::abs(rho.trace() - 1.0);
  if (herm > tol::kHermitianInput) return std::max(herm, trace);
  const double min_eig = eig_hermitian(rho, false).values.front();
  return std::max({herm, trace, -min_eig});
}

JointState JointState::from_matrix(CMatrix rho) {
  if (rho.rows() != kJointDim || rho.cols() != kJointDim)
    throw InvalidInput("joint state must be 10x10");
  const double violation = density_violation(rho);
  if (violation > tol::kDensityTrace)
    throw InvalidInput("joint state violates density-matrix invariants by " + std::to_string(violation));
  return JointState(std::move(rho));
}

void StepConfig::validate() const {
  require_unit_interval(r, "reflectivity r");
  require_unit_interval(T, "transmissivity T");
  require_unit_interval(eta_s, "system-arm transmission eta_s");
  require_unit_interval(eta_e, "environment-arm transmission eta_e");
  if (!std::isfinite(theta)) throw InvalidInput("phase theta must be finite");
}

KrausChannel::KrausChannel(std::vector<CMatrix> operators) : ops_(std::move(operators)) {
  if (ops_.empty()) throw InvalidInput("a channel needs at least one Kraus operator");
  const std::size_t n = ops_.front().rows();
  for (const auto& k : ops_)
    if (k.rows() != n || k.cols() != n) throw InvalidInput("Kraus operators must share one square shape");
}

double KrausChannel::completeness_error() const {
  CMatrix sum(dim(), dim());
  for (const auto& k : ops_) sum += k.adjoint() * k;
  return max_abs_diff(sum, CMatrix::identity(dim()));
}

KrausChannel KrausChannel::compose(const KrausChannel& second, const KrausChannel& first) {
  std::vector<CMatrix> ops;
  for (const auto& b : second.ops_)
    for (const auto& a : first.ops_) {
      CMatrix k = b * a;
      if (k.max_abs() > 0.0) ops.push_back(std::move(k));
    }
  return KrausChannel(std::move(ops));
}

InputSpec InputSpec::parse(const std::string& text) {
  if (text == "bell+") return bell(BellSign::Plus);
  if (text == "bell-") return bell(BellSign::Minus);
  constexpr std::string_view prefix = "werner:";
  if (text.starts_with(prefix)) {
    const std::string number = text.substr(prefix.size());
    std::size_t used = 0;
    double f = 0.0;
    try {
      f = std::stod(number, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != number.size()) throw InvalidInput("bad Werner fidelity in '" + text + "'");
    if (!(f >= 0.25 && f <= 1.0)) throw InvalidInput("Werner fidelity must lie in [0.25, 1]");
    return werner(f);
  }
  throw InvalidInput("unknown input '" + text + "' (expected bell+, bell- or werner:F)");
}

std::string InputSpec::to_string() const {
  if (kind == Kind::Bell) return sign == BellSign::Plus ? "bell+" : "bell-";
  char buf[64];
  std::snprintf(buf, sizeof buf, "werner:%.12g", fidelity);
  return buf;
}

std::vector<Complex> bell_vector(BellSign sign) {
  std::vector<Complex> psi(kJointDim);
  const double amp = std::numbers::sqrt2 / 2.0;
  psi[joint_index(Pol::H, Arm::SV)] = amp;
  psi[joint_index(Pol::V, Arm::SH)] = sign == BellSign::Plus ? amp : -amp;
  return psi;
}

JointState bell_state(BellSign sign) { return JointState::from_matrix(CMatrix::outer(bell_vector(sign))); }

JointState werner_state(double fidelity) {
  if (!(fidelity >= 0.25 && fidelity <= 1.0)) throw InvalidInput("Werner fidelity must lie in [0.25, 1]");
  const double p = (4.0 * fidelity - 1.0) / 3.0;
  const double q = (1.0 - fidelity) / 3.0;
  CMatrix rho = CMatrix::outer(bell_vector(BellSign::Plus)) * p;
  for (Pol a : {Pol::H, Pol::V})
    for (Arm s : {Arm::SH, Arm::SV}) rho(joint_index(a, s), joint_index(a, s)) += q;
  return JointState::from_matrix(std::move(rho));
}

JointState make_input(const InputSpec& spec) {
  return spec.kind == InputSpec::Kind::Bell ? bell_state(spec.sign) : werner_state(spec.fidelity);
}

CMatrix bs_unitary(double r) {
  require_unit_interval(r, "reflectivity r");
  r = clamp_unit(r);
  const Complex reflect = kI * std::sqrt(r);
  const double transmit = std::sqrt(1.0 - r);
  CMatrix u(kArmDim, kArmDim);
  for (auto [s, e] : {std::pair{Arm::SH, Arm::EH}, std::pair{Arm::SV, Arm::EV}}) {
    u(idx(s), idx(s)) = reflect;
    u(idx(e), idx(s)) = transmit;
    u(idx(e), idx(e)) = reflect;
    u(idx(s), idx(e)) = transmit;
  }
  u(idx(Arm::Vac), idx(Arm::Vac)) = 1.0;
  return on_arm(u);
}

CMatrix qwp_unitary() { return on_arm(arm_diagonal({1.0, kI, 1.0, 1.0, 1.0})); }

CMatrix hwp_unitary() { return on_arm(arm_diagonal({1.0, 1.0, 1.0, -1.0, 1.0})); }

CMatrix phase_unitary(double theta) {
  const double reduced = std::fmod(theta, 2.0 * std::numbers::pi);
  const Complex phase = std::polar(1.0, reduced < 0.0 ? reduced + 2.0 * std::numbers::pi : reduced);
  return on_arm(arm_diagonal({phase, phase, 1.0, 1.0, 1.0}));
}

KrausChannel filter_channel(double transmissivity) {
  require_unit_interval(transmissivity, "transmissivity T");
  const double t = clamp_unit(transmissivity);
  const double keep = std::sqrt(t);
  std::vector<CMatrix> ops{on_arm(arm_diagonal({1.0, 1.0, keep, keep, 1.0}))};
  if (t < 1.0) {
    const double lose = std::sqrt(1.0 - t);
    ops.push_back(absorb(Arm::EH, lose));
    ops.push_back(absorb(Arm::EV, lose));
  }
  return KrausChannel(std::move(ops));
}

KrausChannel loss_channel(double eta, LossTarget target) {
  require_unit_interval(eta, "loss transmission eta");
  const double t = clamp_unit(eta);
  const bool sys = target != LossTarget::EnvironmentArm;
  const bool env = target != LossTarget::SystemArm;
  const double ks = sys ? std::sqrt(t) : 1.0;
  const double ke = env ? std::sqrt(t) : 1.0;
  std::vector<CMatrix> ops{on_arm(arm_diagonal({ks, ks, ke, ke, 1.0}))};
  if (t < 1.0) {
    const double lose = std::sqrt(1.0 - t);
    if (sys) {
      ops.push_back(absorb(Arm::SH, lose));
      ops.push_back(absorb(Arm::SV, lose));
    }
    if (env) {
      ops.push_back(absorb(Arm::EH, lose));
      ops.push_back(absorb(Arm::EV, lose));
    }
  }
  return KrausChannel(std::move(ops));
}

KrausChannel step_channel(const StepConfig& cfg) {
  cfg.validate();
  const CMatrix unitary = phase_unitary(cfg.theta) * hwp_unitary() * qwp_unitary() * bs_unitary(cfg.r);
  KrausChannel ch = KrausChannel::compose(filter_channel(cfg.T), KrausChannel({unitary}));
  ch = KrausChannel::compose(loss_channel(cfg.eta_s, LossTarget::SystemArm), ch);
  return KrausChannel::compose(loss_channel(cfg.eta_e, LossTarget::EnvironmentArm), ch);
}

JointState apply_channel(const KrausChannel& channel, const JointState& state) {
  if (channel.dim() != kJointDim) throw InvalidInput("channel does not act on the 10-dimensional joint space");
  CMatrix out(kJointDim, kJointDim);
  for (const auto& k : channel.operators()) out += sandwich(k, state.matrix());
  out = 0.5 * (out + out.adjoint());
  try {
    return JointState::from_matrix(std::move(out));
  } catch (const InvalidInput& e) {
    throw NumericalError(std::string("channel output is not a valid state: ") + e.what());
  }
}

CMatrix reduce_to_ancilla(const JointState& state) {
  return partial_trace(state.matrix(), Keep::First, kJointDims);
}

CMatrix reduce_to_arm(const JointState& state) { return partial_trace(state.matrix(), Keep::Second, kJointDims); }

}  // namespace colsim
