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

#include <span>
#include <vector>

#include "superquad/function.hpp"
#include "superquad/quadrature.hpp"

namespace superquad {

/// Default relative tolerance for scalar verdicts: margin >= -tol * scale.
inline constexpr double kScalarTolerance = 1e-9;

/// Points x_j in [m, M] with convex weights lambda_j.
class WeightedSample {
 public:
  /// Throws DomainError if sizes differ, the sample is empty, a weight is
  /// outside [0, 1], or the weights do not sum to 1 within 1e-12.
  WeightedSample(std::vector<double> points, std::vector<double> weights);

  std::span<const double> points() const { return points_; }
  std::span<const double> weights() const { return weights_; }
  double mean() const;

 private:
  std::vector<double> points_;
  std::vector<double> weights_;
};

/// Claimed ordering of the terms of a chain.
enum class ChainDirection {
  kAscending,   // t0 <= t1 <= t2
  kDescending,  // t0 >= t1 >= t2
  kEqual,       // both, i.e. every term coincides
};

/// Successive expressions of an inequality chain with oriented margins:
/// margins[i] >= 0 means the i-th link holds in the claimed direction
/// (for kEqual the margin is -|t[i+1] - t[i]|).
struct ChainResult {
  std::vector<double> terms;
  std::vector<double> margins;
  ChainDirection direction = ChainDirection::kAscending;
  double tolerance = kScalarTolerance;

  double scale() const;
  double worst_margin() const;
  bool holds() const;
};

ChainResult make_chain(std::vector<double> terms, ChainDirection direction,
                       double tolerance = kScalarTolerance);

/// RHS - LHS of the superquadratic Jensen inequality
///   f(l x + (1-l) y) <= l f(x) + (1-l) f(y) - l f((1-l)|x-y|) - (1-l) f(l|x-y|).
double jensen_sq_gap(const FunctionSpec& f, double x, double y, double lambda);

/// RHS - LHS of the classical Mercer inequality for convex f:
///   f(M + m - sum l_j x_j) <= f(M) + f(m) - sum l_j f(x_j).
double mercer_scalar_gap(const FunctionSpec& f, const Interval& iv, const WeightedSample& s);

/// RHS - LHS of the weighted-mean Mercer bound with the beta correction:
///   f(m + M - x#y) + 2 beta(x)#beta(y)
///     <= f(m) + f(M) - f(x)#f(y) - f((1-l)|x-y|)#f(l|x-y|),
/// where a#b = l a + (1-l) b.
double lemma_nabla_gap(const FunctionSpec& f, const Interval& iv, double x, double y,
                       double lambda);

/// Three-term Mercer/Hermite-Hadamard chain built on the integral mean of
/// f(m + M - u) over [x, y]. Throws DegenerateInstance for x == y.
ChainResult hh_mercer_chain_1(const FunctionSpec& f, const Interval& iv, double x, double y,
                              const QuadratureOptions& q = {});

/// Companion chain built on the integral means of f and beta over [x, y].
ChainResult hh_mercer_chain_2(const FunctionSpec& f, const Interval& iv, double x, double y,
                              const QuadratureOptions& q = {});

/// Hermite-Hadamard chain for superquadratic f on [x, y], 0 <= x < y.
ChainResult hh_sq_chain(const FunctionSpec& f, double x, double y,
                        const QuadratureOptions& q = {});

/// Closed-form chain for f = t^p (p >= 1). Ascending for p > 2, descending
/// for p < 2, every term equal at p = 2.
ChainResult power_chain(double p, const Interval& iv, double x, double y);

/// RHS - LHS of f(x) + f(y) <= f(x+y) - 2 (y f(x) + x f(y)) / (x+y).
double superadditive_gap(const FunctionSpec& f, double x, double y);

/// RHS - LHS of the four-point bound for y1 <= x1 <= x2 <= y2 with
/// x1 + x2 == y1 + y2:
///   f(x1) + f(x2) <= f(y1) + f(y2) - 2 (y2-x1)/(y2-y1) f(x1-y1)
///                                   - 2 (x1-y1)/(y2-y1) f(x2-y1).
double four_point_gap(const FunctionSpec& f, double y1, double x1, double x2, double y2);

}  // namespace superquad
