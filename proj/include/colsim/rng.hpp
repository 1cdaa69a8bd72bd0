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

#include <cstdint>

namespace colsim {

/// Counter-based SplitMix64. Output n of the stream keyed by `seed` is
///   mix(mix(seed) + (n + 1)·0x9E3779B97F4A7C15)
/// with `mix` the SplitMix64 finaliser, so a stream is a pure function of
/// (seed, n) and reproduces bit-for-bit on every platform.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed);

  std::uint64_t next_u64();
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal by Box-Muller (one output per two uniforms).
  double normal();

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

std::uint64_t splitmix64_mix(std::uint64_t z);

/// Poisson variate: inversion for mean < 50, rounded normal approximation
/// (clamped at 0) above.
std::uint64_t sample_poisson(double mean, CounterRng& rng);

}  // namespace colsim
