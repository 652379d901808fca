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

#pragma once

#include <nlohmann/json.hpp>

#include "superquad/matrix.hpp"

namespace superquad {

using Json = nlohmann::ordered_json;

/// Matrices travel as arrays of rows: [[a00, a01], [a10, a11]].
Json matrix_to_json(const Matrix& m);
Json matrix_to_json(const SymMatrix& m);

/// Throws ParseError on anything but a non-empty rectangular array of
/// arrays of numbers.
Matrix matrix_from_json(const Json& j);
/// Additionally throws ParseError if the matrix is not symmetric.
SymMatrix sym_matrix_from_json(const Json& j);

/// Finite doubles as numbers; NaN and infinities as the strings "nan",
/// "inf" and "-inf".
Json number_to_json(double x);
double number_from_json(const Json& j);

}  // namespace superquad
