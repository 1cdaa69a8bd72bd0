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

namespace colsim::tol {

// Input checks.
inline constexpr double kHermitianInput = 1e-8;
inline constexpr double kDensityTrace = 1e-10;
inline constexpr double kDensityHermitian = 1e-10;
inline constexpr double kMinEigenvalue = -1e-10;

// Operator structure.
inline constexpr double kUnitarity = 1e-12;
inline constexpr double kCompleteness = 1e-10;

// Eigensolvers.
inline constexpr double kJacobiOffDiagonal = 1e-15;
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kQrSubdiagonal = 1e-12;
inline constexpr int kQrMaxIterations = 200;

// Concurrence: spin-flip spectrum values in [-kSpectrumClamp, 0) are zeroed.
inline constexpr double kSpectrumClamp = 1e-10;

// Post-selection and backflow bookkeeping.
inline constexpr double kEmptySector = 1e-12;
inline constexpr double kIncrement = 1e-12;

// Parameter-range slack for values such as 1.0000000000000002.
inline constexpr double kParameterSlack = 1e-12;

}  // namespace colsim::tol
