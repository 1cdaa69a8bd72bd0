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

#include <numbers>
#include <random>

#include "colsim/dynamics.hpp"
#include "colsim/errors.hpp"
#include "gtest/gtest.h"

using namespace colsim;
using namespace colsim::oracle;

namespace {

constexpr double kPi = std::numbers::pi;

double vac_population(const CMatrix& rho) {
  return rho(joint_index(Pol::H, Arm::Vac), joint_index(Pol::H, Arm::Vac)).real() +
         rho(joint_index(Pol::V, Arm::Vac), joint_index(Pol::V, Arm::Vac)).real();
}

}  // namespace

TEST(FockState, register_limits) {
  EXPECT_THROW(FockState(kMaxModes + 1), CapacityError);
  FockState s(kMaxModes - 1);
  EXPECT_EQ(s.add_mode(), kMaxModes - 1);
  EXPECT_THROW(s.add_mode(), CapacityError);
  EXPECT_THROW(FockState(3).set(8, 1.0), InvalidInput);
}

TEST(FockState, bell_embedding) {
  const FockState s = bell_fock(BellSign::Plus);
  EXPECT_EQ(s.modes(), std::size_t{kFixedModes});
  EXPECT_NEAR(s.norm(), 1.0, 1e-15);
  EXPECT_EQ(s.photon_number_violation(), 0.0);
  EXPECT_EQ(s.reduce(), bell_state(BellSign::Plus).matrix());
}

TEST(FockState, steps_conserve_norm_and_photons) {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    FockState s = bell_fock(BellSign::Minus);
    const StepConfig cfg{u(gen), u(gen), 2 * kPi * u(gen), 0.3 + 0.7 * u(gen), 1.0};
    for (std::size_t k = 0; k < 3; ++k) {
      run_steps(s, cfg, 1);
      EXPECT_NEAR(s.norm(), 1.0, 1e-12);
      EXPECT_EQ(s.photon_number_violation(), 0.0);
    }
  }
}

TEST(FockState, attenuate_needs_fresh_target) {
  FockState s = product_fock(Pol::H, Pol::H);
  s.set((1u << kAncillaH) | (1u << kEnvH), 0.5);
  EXPECT_THROW(s.attenuate(kSystemH, kEnvH, 0.5), InvalidInput);
}

TEST(SimulateFock, zero_steps_is_input) {
  EXPECT_EQ(simulate_fock(InputSpec::bell(BellSign::Plus), StepConfig{}, 0).matrix(),
            bell_state(BellSign::Plus).matrix());
  EXPECT_LT(max_abs_diff(simulate_fock(InputSpec::werner(0.8), StepConfig{}, 0).matrix(), werner_state(0.8).matrix()),
            1e-15);
}

TEST(SimulateFock, one_ideal_step_matches_model) {
  EXPECT_LE(compare(InputSpec::bell(BellSign::Plus), StepConfig{}, 1), 1e-12);
}

TEST(SimulateFock, opaque_filter_absorbs_half) {
  const StepConfig cfg{0.5, 0.0, 0.0, 1.0, 1.0};
  const CMatrix rho = simulate_fock(InputSpec::bell(BellSign::Plus), cfg, 1).matrix();
  EXPECT_NEAR(vac_population(rho), 0.5, 1e-15);
  // Absorbed population sits in the first step's e₂ modes.
  FockState s = bell_fock(BellSign::Plus);
  run_steps(s, cfg, 1);
  double absorbed = 0.0;
  for (std::uint64_t i = 0; i < s.dim(); ++i)
    if (i >> kFixedModes) absorbed += std::norm(s.amplitudes()[i]);
  EXPECT_NEAR(absorbed, 0.5, 1e-15);
  EXPECT_LE(compare(InputSpec::bell(BellSign::Plus), cfg, 1), 1e-12);
}

TEST(Compare, ideal_three_steps) {
  EXPECT_LE(compare(InputSpec::werner(0.9712), StepConfig{}, 3), 1e-10);
  EXPECT_LE(compare(InputSpec::bell(BellSign::Minus), StepConfig{0.5, 1.0, kPi / 2, 1.0, 1.0}, 3), 1e-10);
}

TEST(Compare, random_configs) {
  std::mt19937_64 gen(1234);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const StepConfig cfg{u(gen), u(gen), 2 * kPi * u(gen), 1.0, 1.0};
    EXPECT_LE(compare(InputSpec::werner(0.25 + 0.75 * u(gen)), cfg, 3), 1e-10) << "trial " << trial;
  }
}

TEST(Compare, lossy_elements) {
  EXPECT_LE(compare(InputSpec::werner(0.9712), StepConfig{0.5, 0.6, 1.0, 0.8, 0.8}, 2), 1e-10);
  EXPECT_LE(compare(InputSpec::bell(BellSign::Plus), StepConfig{0.3, 0.2, 2.0, 0.5, 1.0}, 3), 1e-10);
}

TEST(Compare, four_steps) {
  EXPECT_LE(compare(InputSpec::werner(0.9), StepConfig{0.4, 0.7, 0.9, 1.0, 1.0}, 4), 1e-10);
}

TEST(Compare, capacity) {
  EXPECT_THROW(compare(InputSpec::bell(BellSign::Plus), StepConfig{}, 5), CapacityError);
  EXPECT_THROW(compare(InputSpec::bell(BellSign::Plus), StepConfig{0.5, 0.5, 0.0, 0.8, 0.8}, 3), CapacityError);
}
