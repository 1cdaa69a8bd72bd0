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

#include <omp.h>

#include <numbers>

#include "colsim/dynamics.hpp"
#include "colsim/errors.hpp"
#include "colsim/tomography.hpp"
#include "gtest/gtest.h"

using namespace colsim;

namespace {

class ThreadCount : public ::testing::TestWithParam<int> {
 protected:
  void SetUp() override {
    saved_ = omp_get_max_threads();
    omp_set_num_threads(GetParam());
  }
  void TearDown() override { omp_set_num_threads(saved_); }

 private:
  int saved_ = 1;
};

bool same_rows(const std::vector<SweepRow>& a, const std::vector<SweepRow>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].T != b[i].T || a[i].theta != b[i].theta || a[i].step != b[i].step) return false;
    if (a[i].c_as != b[i].c_as || a[i].c_ae != b[i].c_ae || a[i].n_cumulative != b[i].n_cumulative) return false;
  }
  return true;
}

}  // namespace

TEST_P(ThreadCount, sweep_matches_serial_bitwise) {
  std::vector<double> phases;
  for (int i = 0; i < 16; ++i) phases.push_back(2 * std::numbers::pi * i / 15.0);
  const SweepGrid grid{{0.0, 0.0625, 0.25, 0.5, 1.0}, phases};
  const StepConfig base{0.5, 1.0, 0.0, 0.9, 0.8};
  const auto parallel = sweep(InputSpec::werner(0.9712), grid, base, 6);
  const auto serial = sweep_serial(InputSpec::werner(0.9712), grid, base, 6);
  EXPECT_TRUE(same_rows(parallel, serial));
}

TEST_P(ThreadCount, mc_errorbars_matches_serial_bitwise) {
  const CMatrix rho = post_select(werner_state(0.9712), Sector::System).rho;
  const auto parallel = mc_errorbars(rho, 10000, 37, 5);
  const auto serial = mc_errorbars_serial(rho, 10000, 37, 5);
  EXPECT_EQ(parallel.concurrences, serial.concurrences);
  EXPECT_EQ(parallel.c_mean, serial.c_mean);
  EXPECT_EQ(parallel.c_std, serial.c_std);
  for (std::size_t i = 0; i < 37; ++i) EXPECT_EQ(parallel.mc_samples[i], serial.mc_samples[i]);
}

TEST_P(ThreadCount, sweep_error_names_point) {
  const SweepGrid grid{{0.5, 1.0, 2.0}, {0.0, 1.0}};
  EXPECT_THROW(sweep(InputSpec::bell(BellSign::Plus), grid, StepConfig{}, 2), InvalidInput);
}

INSTANTIATE_TEST_SUITE_P(Threads, ThreadCount, ::testing::Values(1, 2, 4));
