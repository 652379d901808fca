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

#include "superquad/quadrature.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "superquad/errors.hpp"

namespace superquad {

namespace {

// Guards against a lucky agreement of the coarsest estimates.
constexpr int kMinDepth = 4;

class Simpson {
 public:
  Simpson(const std::function<double(double)>& g, int max_depth)
      : g_(g), max_depth_(max_depth) {}

  double eval(double x) const {
    double v = g_(x);
    if (!std::isfinite(v)) throw NumericError("integrand is not finite");
    return v;
  }

  double recurse(double a, double b, double fa, double fm, double fb, double whole, double tol,
                 int depth) const {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = eval(lm);
    const double frm = eval(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double refined = left + right;
    const double delta = refined - whole;

    const double floor = 64.0 * std::numeric_limits<double>::epsilon() *
                         (std::abs(left) + std::abs(right));
    if (depth >= max_depth_ ||
        (depth >= kMinDepth && (std::abs(delta) <= 15.0 * tol || tol <= floor))) {
      return refined + delta / 15.0;
    }
    return recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           recurse(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
  }

 private:
  const std::function<double(double)>& g_;
  int max_depth_;
};

}  // namespace

double integrate(const std::function<double(double)>& g, double a, double b,
                 const QuadratureOptions& opts) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw NumericError("non-finite integration bounds");
  if (a > b) throw std::invalid_argument("integrate requires a <= b");
  if (a == b) return 0.0;

  Simpson s(g, opts.max_depth);
  const double fa = s.eval(a);
  const double fb = s.eval(b);
  const double fm = s.eval(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return s.recurse(a, b, fa, fm, fb, whole, opts.abs_tol, 0);
}

}  // namespace superquad
