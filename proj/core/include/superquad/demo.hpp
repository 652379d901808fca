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

#include <string>
#include <utility>
#include <vector>

#include "superquad/json_io.hpp"
#include "superquad/matrix.hpp"

namespace superquad {

struct DemoCheck {
  std::string name;
  double error = 0.0;  // max-abs deviation from the oracle
  double tolerance = 0.0;
  bool passed() const { return error <= tolerance; }
};

/// Sub-additivity worked example: f(t) = t^3, M = 3,
/// B = [[2, -1], [-1, 2]], C = diag(3, 2).
struct DemoResult {
  /// B, C, f(B), f(C), beta(B), beta(C), f(B+C), f(B+C-3I), LHS, RHS.
  std::vector<std::pair<std::string, SymMatrix>> matrices;
  std::vector<DemoCheck> checks;
  double margin = 0.0;  // min eig(RHS - LHS)
  std::string note;

  bool passed() const;
  Json to_json() const;
};

/// f(B) and beta(B) are compared with their exact values; every other
/// matrix with an oracle built from plain matrix products. The margin must
/// lie in 17.39 +- 0.01.
DemoResult demo_worked_example();

}  // namespace superquad
