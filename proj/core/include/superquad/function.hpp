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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace superquad {

/// A member of the power-function catalog on [0, inf):
///   kPower:    f(t) =  t^p
///   kNegPower: f(t) = -t^q
/// Every member satisfies f(0) = 0.
class FunctionSpec {
 public:
  enum class Kind { kPower, kNegPower };

  /// Throws DomainError unless exponent > 0 and finite.
  FunctionSpec(Kind kind, double exponent);

  static FunctionSpec power(double p) { return {Kind::kPower, p}; }
  static FunctionSpec neg_power(double q) { return {Kind::kNegPower, q}; }

  /// Parses `pow:<p>` or `negpow:<q>`. Throws ParseError.
  static FunctionSpec parse(std::string_view text);

  /// Canonical text form; parse(to_string()) reproduces the spec exactly.
  std::string to_string() const;

  Kind kind() const { return kind_; }
  double exponent() const { return exponent_; }

  /// True iff (power, p >= 2) or (neg_power, 1 <= q <= 2).
  bool claimed_superquadratic() const;

  /// Convex on [0, inf): t^p with p >= 1, or -t^q with q <= 1.
  bool is_convex() const;

  /// f(t); throws DomainError for t < 0 or non-finite t.
  double operator()(double t) const;

  friend bool operator==(const FunctionSpec&, const FunctionSpec&) = default;

 private:
  Kind kind_;
  double exponent_;
};

/// Spectral interval [m, M] with 0 <= m < M.
struct Interval {
  Interval(double lower, double upper);

  double lower;
  double upper;

  double width() const { return upper - lower; }
  bool contains(double t) const { return t >= lower && t <= upper; }
};

/// f(t) for t >= 0.
double eval_f(const FunctionSpec& f, double t);

/// beta(t) = (t-m)/(M-m) f(M-t) + (M-t)/(M-m) f(t-m), t in [m, M].
/// Throws DomainError outside the interval.
double beta_eval(const FunctionSpec& f, const Interval& iv, double t);

/// Closed form of beta for f = t^p:
///   (M-x)(x-m)/(M-m) * ((M-x)^(p-1) + (x-m)^(p-1)).
/// Requires p >= 1 and x in [m, M].
double beta_p_closed(double p, const Interval& iv, double x);

/// Admissible slope window at one abscissa of the certification grid.
struct SlopeWindow {
  double x = 0.0;
  double lower = 0.0;  // sup over y < x; -inf when no such y
  double upper = 0.0;  // inf over y > x; +inf when no such y
  std::size_t lower_arg = 0;  // grid index realizing `lower`
  std::size_t upper_arg = 0;  // grid index realizing `upper`
  bool nonempty = true;
};

struct CertificateWitness {
  double x;
  double y_lower;  // y < x pushing C_x up
  double y_upper;  // y > x pushing C_x down
  double lower;
  double upper;
};

/// Grid-based certificate that for every x there is a C_x with
///   f(y) >= f(x) + C_x (y - x) + f(|y - x|).
struct SuperquadraticityCertificate {
  std::vector<double> grid;
  std::vector<SlopeWindow> windows;
  double tolerance = 0.0;
  bool holds = true;
  /// First grid point with an empty window; set iff !holds.
  std::optional<CertificateWitness> witness;

  /// Midpoint of the window at grid index i (the reported C_x).
  double slope_constant(std::size_t i) const;
  /// min over the grid of (upper - lower); negative iff some window is empty.
  double worst_width() const;
};

inline constexpr double kDefaultCertificationHorizon = 10.0;

/// Uniform grid of `grid_size` points on [0, T] (0 included). Throws
/// std::invalid_argument for grid_size < 3 or T <= 0.
SuperquadraticityCertificate certify_superquadratic(
    const FunctionSpec& f, double horizon = kDefaultCertificationHorizon,
    std::size_t grid_size = 200);

}  // namespace superquad
