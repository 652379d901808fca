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

#include "superquad/json_io.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "superquad/errors.hpp"

namespace superquad {

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(number_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json matrix_to_json(const SymMatrix& m) { return matrix_to_json(m.matrix()); }

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array of rows");
  std::vector<std::vector<double>> rows;
  rows.reserve(j.size());
  for (const Json& row : j) {
    if (!row.is_array() || row.empty()) throw ParseError("matrix row must be a non-empty array");
    std::vector<double>& out = rows.emplace_back();
    for (const Json& v : row) out.push_back(number_from_json(v));
    if (out.size() != rows.front().size()) throw ParseError("matrix rows differ in length");
  }
  return Matrix::from_rows(rows);
}

SymMatrix sym_matrix_from_json(const Json& j) {
  const Matrix m = matrix_from_json(j);
  try {
    return SymMatrix(m);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("not a symmetric matrix: ") + e.what());
  }
}

Json number_to_json(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double number_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
  }
  throw ParseError("expected a number, got " + j.dump());
}

}  // namespace superquad
