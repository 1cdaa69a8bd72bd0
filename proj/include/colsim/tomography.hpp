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
#include <span>
#include <string>
#include <vector>

#include "colsim/complex_matrix.hpp"

namespace colsim {

/// Single-qubit polarisation eigenstates: D=(H+V)/√2, A=(H−V)/√2,
/// R=(H+iV)/√2, L=(H−iV)/√2.
enum class Polarization { H, V, D, A, R, L };

std::string to_string(Polarization p);

struct Projector {
  Polarization ancilla;
  Polarization system;
  CMatrix matrix;  // |p⟩⟨p| ⊗ |q⟩⟨q|
};

/// All 36 two-qubit products of the six eigenstates, ancilla-major in the
/// order H, V, D, A, R, L.
struct ProjectorSet {
  std::vector<Projector> projectors;
  std::size_t size() const { return projectors.size(); }
};

ProjectorSet projector_set();

/// Born-rule probabilities Tr(ρΠᵢ).
std::vector<double> expected_probs(const CMatrix& rho, const ProjectorSet& set);

/// countᵢ ~ Poisson(shots·pᵢ), drawn in projector order from CounterRng(seed).
std::vector<std::uint64_t> sample_counts(std::span<const double> probs, std::uint64_t shots, std::uint64_t seed);

/// Linear inversion: least squares for the Pauli coefficients against the
/// frequencies countᵢ/shots, then projection onto the physical set (negative
/// eigenvalues clipped, trace renormalised). All-zero counts are rejected.
CMatrix reconstruct(std::span<const double> counts, const ProjectorSet& set, std::uint64_t shots);
CMatrix reconstruct(std::span<const std::uint64_t> counts, const ProjectorSet& set, std::uint64_t shots);

struct TomographyResult {
  CMatrix rho_hat;                   // from the noiseless expected counts
  std::vector<CMatrix> mc_samples;   // one reconstruction per run, run order
  std::vector<double> concurrences;  // concurrence of each sample
  double c_mean = 0.0;
  double c_std = 0.0;  // sample standard deviation (n − 1)
  std::uint64_t seed = 0;
  std::uint64_t shots_per_projector = 0;
};

/// `runs` sample→reconstruct cycles; run i draws from seed + i. Runs are
/// distributed with OpenMP; the result does not depend on the schedule.
TomographyResult mc_errorbars(const CMatrix& rho_true, std::uint64_t shots, std::size_t runs, std::uint64_t seed);

/// Single-threaded reference for mc_errorbars(); bit-identical output.
TomographyResult mc_errorbars_serial(const CMatrix& rho_true, std::uint64_t shots, std::size_t runs,
                                     std::uint64_t seed);

}  // namespace colsim
