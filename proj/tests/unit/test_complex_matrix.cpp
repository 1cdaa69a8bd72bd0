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

#include "colsim/complex_matrix.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"

using namespace colsim;

TEST(CMatrix, rejects_empty_shape) {
  EXPECT_THROW(CMatrix(0, 3), std::invalid_argument);
  EXPECT_THROW(CMatrix(2, 0), std::invalid_argument);
  EXPECT_THROW(CMatrix(2, 2, std::vector<Complex>(3)), std::invalid_argument);
}

TEST(CMatrix, identity_and_product) {
  const CMatrix a{{1.0, Complex(0, 2)}, {3.0, 4.0}};
  EXPECT_EQ(a * CMatrix::identity(2), a);
  EXPECT_EQ(CMatrix::identity(2) * a, a);
  const CMatrix b{{0.0, 1.0}, {1.0, 0.0}};
  const CMatrix ab = a * b;
  EXPECT_EQ(ab(0, 0), Complex(0, 2));
  EXPECT_EQ(ab(0, 1), Complex(1, 0));
  EXPECT_EQ(ab(1, 0), Complex(4, 0));
}

TEST(CMatrix, adjoint_conjugates_and_transposes) {
  const CMatrix a{{1.0, Complex(0, 2)}, {Complex(3, -1), 4.0}};
  const CMatrix ad = a.adjoint();
  EXPECT_EQ(ad(0, 1), Complex(3, 1));
  EXPECT_EQ(ad(1, 0), Complex(0, -2));
  EXPECT_EQ(a.transpose().conjugate(), ad);
  EXPECT_GT(a.hermiticity_error(), 1.0);
  EXPECT_EQ((a + ad).hermiticity_error(), 0.0);
}

TEST(CMatrix, outer_is_projector) {
  const std::vector<Complex> v{1.0 / std::sqrt(2.0), Complex(0, 1.0 / std::sqrt(2.0))};
  const CMatrix p = CMatrix::outer(v);
  EXPECT_NEAR(max_abs_diff(p * p, p), 0.0, 1e-15);
  EXPECT_NEAR(p.trace().real(), 1.0, 1e-15);
}

TEST(CMatrix, finiteness_flag) {
  CMatrix a = CMatrix::identity(2);
  EXPECT_TRUE(a.all_finite());
  a(1, 0) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_FALSE(a.all_finite());
}

TEST(CMatrix, sandwich_matches_explicit_product) {
  const CMatrix a{{1.0, Complex(0, 1)}, {2.0, 0.5}};
  const CMatrix rho{{0.7, 0.1}, {0.1, 0.3}};
  EXPECT_EQ(sandwich(a, rho), a * rho * a.adjoint());
}
