// Copyright 2026 The superquad Authors
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

#include <limits>

#include <gtest/gtest.h>

#include "superquad/matrix.hpp"

namespace superquad {
namespace {

TEST(Matrix, BasicAlgebra) {
  const Matrix a = Matrix::from_rows({{1.0, 2.0}, {3.0, 4.0}});
  const Matrix b = Matrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
  EXPECT_EQ(a * b, Matrix::from_rows({{2.0, 1.0}, {4.0, 3.0}}));
  EXPECT_EQ(a + b, Matrix::from_rows({{1.0, 3.0}, {4.0, 4.0}}));
  EXPECT_EQ(a - a, Matrix(2, 2));
  EXPECT_EQ(2.0 * a, Matrix::from_rows({{2.0, 4.0}, {6.0, 8.0}}));
  EXPECT_EQ(a.transpose(), Matrix::from_rows({{1.0, 3.0}, {2.0, 4.0}}));
  EXPECT_DOUBLE_EQ(a.trace(), 5.0);
  EXPECT_DOUBLE_EQ(a.max_abs(), 4.0);
  EXPECT_DOUBLE_EQ(Matrix::from_rows({{3.0, 0.0}, {0.0, 4.0}}).frobenius(), 5.0);
  EXPECT_NEAR(a.determinant(), -2.0, 1e-15);
  EXPECT_EQ(Matrix::identity(2) * a, a);
}

TEST(Matrix, ShapeErrors) {
  EXPECT_THROW(Matrix::from_rows({{1.0, 2.0}, {3.0}}), std::invalid_argument);
  EXPECT_THROW(Matrix(2, 3) * Matrix(2, 3), std::invalid_argument);
  EXPECT_THROW(Matrix(2, 3) + Matrix(3, 2), std::invalid_argument);
  EXPECT_THROW(Matrix(2, 3).determinant(), std::invalid_argument);
}

TEST(Matrix, DeterminantOfPermutation) {
  const Matrix p = Matrix::from_rows({{0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}, {1.0, 0.0, 0.0}});
  EXPECT_NEAR(p.determinant(), 1.0, 1e-15);
  EXPECT_NEAR(Matrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}).determinant(), -1.0, 1e-15);
}

TEST(SymMatrix, ValidatesSymmetry) {
  EXPECT_NO_THROW(SymMatrix::from_rows({{1.0, 2.0}, {2.0, 1.0}}));
  EXPECT_THROW(SymMatrix::from_rows({{1.0, 2.0}, {2.1, 1.0}}), std::invalid_argument);
  EXPECT_THROW(SymMatrix(Matrix(2, 3)), std::invalid_argument);
  EXPECT_THROW(SymMatrix(Matrix(0, 0)), std::invalid_argument);
  EXPECT_THROW(SymMatrix::from_rows({{1.0, std::numeric_limits<double>::infinity()}, {0.0, 1.0}}), std::invalid_argument);
}

TEST(SymMatrix, AveragesRoundoffAsymmetry) {
  const SymMatrix s = SymMatrix::from_rows({{1.0, 2.0}, {2.0 + 1e-14, 1.0}});
  EXPECT_EQ(s(0, 1), s(1, 0));
}

TEST(SymMatrix, Factories) {
  EXPECT_EQ(SymMatrix::scalar(2, 3.0).matrix(), Matrix::from_rows({{3.0, 0.0}, {0.0, 3.0}}));
  EXPECT_EQ(SymMatrix::identity(3).matrix(), Matrix::identity(3));
  EXPECT_EQ(SymMatrix::diagonal({1.0, 2.0}).matrix(), Matrix::from_rows({{1.0, 0.0}, {0.0, 2.0}}));
  EXPECT_EQ(SymMatrix::diagonal({1.0, 2.0}).shifted(-1.0).matrix(),
            Matrix::from_rows({{0.0, 0.0}, {0.0, 1.0}}));
}

TEST(SymMatrix, CongruenceMatchesProduct) {
  const Matrix u = Matrix::from_rows({{0.6, -0.8}, {0.8, 0.6}});
  const SymMatrix x = SymMatrix::from_rows({{2.0, -1.0}, {-1.0, 3.0}});
  const Matrix want = u.transpose() * x.matrix() * u;
  EXPECT_LT(max_abs_diff(SymMatrix::congruence(u, x).matrix(), want), 1e-15);
}

TEST(SymMatrix, FromSpectrum) {
  const Matrix q = Matrix::from_rows({{0.6, -0.8}, {0.8, 0.6}});
  const std::vector<double> vals{1.0, 4.0};
  const SymMatrix s = SymMatrix::from_spectrum(q, vals);
  Matrix d(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = 4.0;
  EXPECT_LT(max_abs_diff(s.matrix(), q * d * q.transpose()), 1e-15);
}

TEST(SymMatrix, Arithmetic) {
  const SymMatrix a = SymMatrix::from_rows({{1.0, 2.0}, {2.0, 1.0}});
  const SymMatrix b = SymMatrix::identity(2);
  EXPECT_EQ((a + b).matrix(), Matrix::from_rows({{2.0, 2.0}, {2.0, 2.0}}));
  EXPECT_EQ((a - b).matrix(), Matrix::from_rows({{0.0, 2.0}, {2.0, 0.0}}));
  EXPECT_EQ((-a).matrix(), Matrix::from_rows({{-1.0, -2.0}, {-2.0, -1.0}}));
  EXPECT_EQ((0.5 * a).matrix(), Matrix::from_rows({{0.5, 1.0}, {1.0, 0.5}}));
  EXPECT_EQ(a * a, Matrix::from_rows({{5.0, 4.0}, {4.0, 5.0}}));
}

}  // namespace
}  // namespace superquad
