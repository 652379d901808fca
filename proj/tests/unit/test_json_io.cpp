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

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "superquad/errors.hpp"
#include "superquad/json_io.hpp"

namespace superquad {
namespace {

TEST(JsonIo, MatrixRoundTrip) {
  const Matrix m = Matrix::from_rows({{1.0, -2.5}, {0.1, 3.0}, {4.0, 5.0}});
  const Json j = matrix_to_json(m);
  EXPECT_EQ(j.dump(), "[[1.0,-2.5],[0.1,3.0],[4.0,5.0]]");
  EXPECT_EQ(matrix_from_json(j), m);
  EXPECT_EQ(matrix_from_json(Json::parse(j.dump())), m);
}

TEST(JsonIo, SymMatrixRoundTrip) {
  const SymMatrix s = SymMatrix::from_rows({{2.0, 0.3}, {0.3, 1.0}});
  EXPECT_EQ(sym_matrix_from_json(matrix_to_json(s)), s);
}

TEST(JsonIo, RejectsMalformed) {
  for (const char* text : {"3", "[]", "[[]]", "[[1,2],[3]]", "[[1,\"a\"]]", "[1,2]"}) {
    EXPECT_THROW(matrix_from_json(Json::parse(text)), ParseError) << text;
  }
  EXPECT_THROW(sym_matrix_from_json(Json::parse("[[1,2],[3,4]]")), ParseError);
  EXPECT_THROW(sym_matrix_from_json(Json::parse("[[1,2,3]]")), ParseError);
}

TEST(JsonIo, NonFiniteNumbers) {
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_EQ(number_to_json(inf), Json("inf"));
  EXPECT_EQ(number_to_json(-inf), Json("-inf"));
  EXPECT_EQ(number_to_json(std::nan("")), Json("nan"));
  EXPECT_EQ(number_to_json(1.5), Json(1.5));
  EXPECT_EQ(number_from_json(Json("inf")), inf);
  EXPECT_EQ(number_from_json(Json("-inf")), -inf);
  EXPECT_TRUE(std::isnan(number_from_json(Json("nan"))));
  EXPECT_EQ(number_from_json(Json(2)), 2.0);
  EXPECT_THROW(number_from_json(Json("x")), ParseError);
}

}  // namespace
}  // namespace superquad
