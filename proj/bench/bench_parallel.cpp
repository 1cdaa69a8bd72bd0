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

// Serial reference vs OpenMP kernels for the two embarrassingly parallel loops.

#include <benchmark/benchmark.h>

#include <numbers>

#include "colsim/dynamics.hpp"
#include "colsim/tomography.hpp"

using namespace colsim;

namespace {

SweepGrid surface_grid(int phases) {
  SweepGrid g{{0.0, 0.0625, 0.25, 0.5, 1.0}, {}};
  for (int i = 0; i < phases; ++i) g.phases.push_back(2 * std::numbers::pi * i / (phases - 1));
  return g;
}

void BM_SweepSerial(benchmark::State& state) {
  const SweepGrid grid = surface_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_serial(InputSpec::werner(0.9712), grid, StepConfig{}, 6));
  state.SetItemsProcessed(state.iterations() * grid.transmissivities.size() * grid.phases.size());
}

void BM_SweepParallel(benchmark::State& state) {
  const SweepGrid grid = surface_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sweep(InputSpec::werner(0.9712), grid, StepConfig{}, 6));
  state.SetItemsProcessed(state.iterations() * grid.transmissivities.size() * grid.phases.size());
}

void BM_McSerial(benchmark::State& state) {
  const CMatrix rho = post_select(werner_state(0.9712), Sector::System).rho;
  for (auto _ : state) benchmark::DoNotOptimize(mc_errorbars_serial(rho, 10000, state.range(0), 0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_McParallel(benchmark::State& state) {
  const CMatrix rho = post_select(werner_state(0.9712), Sector::System).rho;
  for (auto _ : state) benchmark::DoNotOptimize(mc_errorbars(rho, 10000, state.range(0), 0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_McSerial)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_McParallel)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
