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

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "colsim/complex_matrix.hpp"

namespace colsim {

/// Kronecker product; entry (iA·rB + iB, jA·cB + jB) = A(iA, jA)·B(iB, jB).
CMatrix tensor(const CMatrix& a, const CMatrix& b);

enum class Keep { First, Second };

struct BipartiteDims {
  std::size_t first;
  std::size_t second;
};

/// Partial trace over one factor of a first ⊗ second operator.
CMatrix partial_trace(const CMatrix& rho, Keep keep, BipartiteDims dims);

struct HermitianSpectrum {
  std::vector<double> values;     // ascending
  std::optional<CMatrix> vectors;  // columns, matching `values`
};

/// Cyclic complex Jacobi. Requires ‖M − M†‖_max ≤ 1e-8 and n ≤ 10; only the
/// Hermitian part of M is diagonalised.
HermitianSpectrum eig_hermitian(const CMatrix& m, bool with_vectors = true);

/// Eigenvalues of a general square complex matrix (n ≤ 10) by Householder
/// reduction to Hessenberg form and Wilkinson-shifted QR. Order is the
/// deflation order, not sorted.
std::vector<Complex> eig_general(const CMatrix& m);

/// eig_general restricted to 4×4, as used for the spin-flip spectrum.
std::array<Complex, 4> eig_general4(const CMatrix& m);

/// Singular values (descending) by one-sided Jacobi. Small singular values
/// carry absolute error ~ eps·σ_max, with no square-root amplification.
std::vector<double> singular_values(const CMatrix& m);

/// ½ Σ |eig(ρ − σ)|.
double trace_distance(const CMatrix& rho, const CMatrix& sigma);

/// Re Tr(ρ²).
double purity(const CMatrix& rho);

/// <ψ|ρ|ψ> (real part).
double expectation(const CMatrix& rho, std::span<const Complex> psi);

/// Solves A x = b for symmetric positive definite A (n×n, row-major) by
/// Cholesky factorisation.
std::vector<double> solve_spd(std::span<const double> a, std::size_t n, std::span<const double> b);

}  // namespace colsim
