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

#include <functional>

namespace superquad {

struct QuadratureOptions {
  double abs_tol = 1e-10;
  int max_depth = 40;
};

/// Adaptive Simpson estimate of the integral of g over [a, b] (a <= b).
/// Subintervals are accepted once the Richardson error estimate is within
/// the (halved-per-level) tolerance, or once the tolerance falls below the
/// roundoff floor of the local estimate. Throws NumericError if g returns a
/// non-finite value, std::invalid_argument if a > b.
double integrate(const std::function<double(double)>& g, double a, double b,
                 const QuadratureOptions& opts = {});

}  // namespace superquad
