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

#include "superquad/scalar_inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "superquad/errors.hpp"

namespace superquad {

namespace {

void require_unit(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw DomainError("lambda must lie in [0, 1]");
}

void require_in(const Interval& iv, double x, const char* name) {
  if (!iv.contains(x)) throw DomainError(std::string(name) + " must lie in [m, M]");
}

// 2 * int_0^{1/2} f(u d) du
double half_moment(const FunctionSpec& f, double d, const QuadratureOptions& q) {
  return 2.0 * integrate([&](double u) { return f(u * d); }, 0.0, 0.5, q);
}

// 2 * int_0^1 (1 - u) f(u d) du
double linear_moment(const FunctionSpec& f, double d, const QuadratureOptions& q) {
  return 2.0 * integrate([&](double u) { return (1.0 - u) * f(u * d); }, 0.0, 1.0, q);
}

struct Span {
  double lo;
  double hi;
  double length() const { return hi - lo; }
};

Span ordered_span(double x, double y) {
  if (x == y) throw DegenerateInstance("integral mean over [x, y] needs x != y");
  return {std::min(x, y), std::max(x, y)};
}

}  // namespace

WeightedSample::WeightedSample(std::vector<double> points, std::vector<double> weights)
    : points_(std::move(points)), weights_(std::move(weights)) {
  if (points_.empty() || points_.size() != weights_.size()) {
    throw DomainError("weighted sample needs matching, non-empty points and weights");
  }
  for (double w : weights_) {
    if (!(w >= 0.0 && w <= 1.0)) throw DomainError("weights must lie in [0, 1]");
  }
  const double total = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-12) throw DomainError("weights must sum to 1");
}

double WeightedSample::mean() const {
  return std::inner_product(points_.begin(), points_.end(), weights_.begin(), 0.0);
}

double ChainResult::scale() const {
  double s = 0.0;
  for (double t : terms) s = std::max(s, std::abs(t));
  return 1.0 + s;
}

double ChainResult::worst_margin() const {
  return margins.empty() ? 0.0 : *std::min_element(margins.begin(), margins.end());
}

bool ChainResult::holds() const { return worst_margin() >= -tolerance * scale(); }

ChainResult make_chain(std::vector<double> terms, ChainDirection direction, double tolerance) {
  ChainResult r;
  r.direction = direction;
  r.tolerance = tolerance;
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    const double step = terms[i + 1] - terms[i];
    switch (direction) {
      case ChainDirection::kAscending:
        r.margins.push_back(step);
        break;
      case ChainDirection::kDescending:
        r.margins.push_back(-step);
        break;
      case ChainDirection::kEqual:
        r.margins.push_back(-std::abs(step));
        break;
    }
  }
  r.terms = std::move(terms);
  return r;
}

double jensen_sq_gap(const FunctionSpec& f, double x, double y, double lambda) {
  if (x < 0.0 || y < 0.0) throw DomainError("jensen_sq_gap needs x, y >= 0");
  require_unit(lambda);
  const double mu = 1.0 - lambda;
  const double d = std::abs(x - y);
  const double lhs = f(lambda * x + mu * y);
  const double rhs = lambda * f(x) + mu * f(y) - lambda * f(mu * d) - mu * f(lambda * d);
  return rhs - lhs;
}

double mercer_scalar_gap(const FunctionSpec& f, const Interval& iv, const WeightedSample& s) {
  if (!f.is_convex()) throw DomainError("Mercer inequality needs a convex function");
  double weighted = 0.0;
  for (std::size_t j = 0; j < s.points().size(); ++j) {
    require_in(iv, s.points()[j], "sample point");
    weighted += s.weights()[j] * f(s.points()[j]);
  }
  const double reflected = std::clamp(iv.upper + iv.lower - s.mean(), iv.lower, iv.upper);
  return f(iv.upper) + f(iv.lower) - weighted - f(reflected);
}

double lemma_nabla_gap(const FunctionSpec& f, const Interval& iv, double x, double y,
                       double lambda) {
  require_in(iv, x, "x");
  require_in(iv, y, "y");
  require_unit(lambda);
  const double mu = 1.0 - lambda;
  const double d = std::abs(x - y);
  const double mean = lambda * x + mu * y;
  const double reflected = std::clamp(iv.lower + iv.upper - mean, iv.lower, iv.upper);

  const double lhs =
      f(reflected) + 2.0 * (lambda * beta_eval(f, iv, x) + mu * beta_eval(f, iv, y));
  const double rhs = f(iv.lower) + f(iv.upper) - (lambda * f(x) + mu * f(y)) -
                     (lambda * f(mu * d) + mu * f(lambda * d));
  return rhs - lhs;
}

ChainResult hh_mercer_chain_1(const FunctionSpec& f, const Interval& iv, double x, double y,
                              const QuadratureOptions& q) {
  require_in(iv, x, "x");
  require_in(iv, y, "y");
  const Span s = ordered_span(x, y);
  const double d = s.length();
  const double m = iv.lower;
  const double big = iv.upper;

  const double left = f(m + big - 0.5 * (x + y)) + half_moment(f, d, q);
  const double middle =
      integrate([&](double u) { return f(m + big - u); }, s.lo, s.hi, q) / d;
  const double right = f(m) + f(big) - 0.5 * (f(x) + f(y)) -
                       (beta_eval(f, iv, x) + beta_eval(f, iv, y)) - linear_moment(f, d, q);
  return make_chain({left, middle, right}, ChainDirection::kAscending);
}

ChainResult hh_mercer_chain_2(const FunctionSpec& f, const Interval& iv, double x, double y,
                              const QuadratureOptions& q) {
  require_in(iv, x, "x");
  require_in(iv, y, "y");
  const Span s = ordered_span(x, y);
  const double d = s.length();
  const double m = iv.lower;
  const double big = iv.upper;

  const double mean_f = integrate([&](double u) { return f(u); }, s.lo, s.hi, q) / d;
  const double mean_beta =
      integrate([&](double u) { return beta_eval(f, iv, u); }, s.lo, s.hi, q) / d;
  const double half = half_moment(f, d, q);

  const double left = f(m + big - 0.5 * (x + y)) + half;
  const double middle = f(m) + f(big) - (mean_f + 2.0 * mean_beta);
  const double right = f(m) + f(big) - f(0.5 * (x + y)) - 2.0 * mean_beta - half;
  return make_chain({left, middle, right}, ChainDirection::kAscending);
}

ChainResult hh_sq_chain(const FunctionSpec& f, double x, double y, const QuadratureOptions& q) {
  if (!(x >= 0.0)) throw DomainError("hh_sq_chain needs x >= 0");
  if (!(x < y)) throw DegenerateInstance("hh_sq_chain needs x < y");
  const double d = y - x;
  const double left = f(0.5 * (x + y)) + half_moment(f, d, q);
  const double middle = integrate([&](double u) { return f(u); }, x, y, q) / d;
  const double right = 0.5 * (f(x) + f(y)) - 2.0 * f(0.0) - linear_moment(f, d, q);
  return make_chain({left, middle, right}, ChainDirection::kAscending);
}

ChainResult power_chain(double p, const Interval& iv, double x, double y) {
  if (!(p >= 1.0)) throw DomainError("power_chain needs p >= 1");
  require_in(iv, x, "x");
  require_in(iv, y, "y");
  if (x == y) throw DegenerateInstance("power_chain needs x != y");

  const double m = iv.lower;
  const double big = iv.upper;
  const double d = std::abs(x - y);
  const double dp = std::pow(d, p);

  const double left =
      std::pow(m + big - 0.5 * (x + y), p) + dp / (std::pow(2.0, p) * (p + 1.0));
  const double middle =
      (std::pow(big + m - x, p + 1.0) - std::pow(big + m - y, p + 1.0)) / ((p + 1.0) * (y - x));
  const double right = std::pow(m, p) + std::pow(big, p) -
                       0.5 * (std::pow(x, p) + std::pow(y, p)) -
                       (beta_p_closed(p, iv, x) + beta_p_closed(p, iv, y)) -
                       2.0 * dp / ((p + 1.0) * (p + 2.0));

  ChainDirection dir = ChainDirection::kAscending;
  if (p == 2.0) {
    dir = ChainDirection::kEqual;
  } else if (p < 2.0) {
    dir = ChainDirection::kDescending;
  }
  return make_chain({left, middle, right}, dir);
}

double superadditive_gap(const FunctionSpec& f, double x, double y) {
  if (x < 0.0 || y < 0.0) throw DomainError("superadditive_gap needs x, y >= 0");
  if (x + y == 0.0) throw DegenerateInstance("superadditive_gap needs x + y > 0");
  const double fx = f(x);
  const double fy = f(y);
  const double rhs = f(x + y) - 2.0 * (y * fx + x * fy) / (x + y);
  return rhs - (fx + fy);
}

double four_point_gap(const FunctionSpec& f, double y1, double x1, double x2, double y2) {
  if (!(0.0 <= y1 && y1 <= x1 && x1 <= x2 && x2 <= y2)) {
    throw DomainError("four_point_gap needs 0 <= y1 <= x1 <= x2 <= y2");
  }
  if (!(y1 < y2)) throw DegenerateInstance("four_point_gap needs y1 < y2");
  if (std::abs((x1 + x2) - (y1 + y2)) > 1e-12 * (1.0 + y2)) {
    throw DomainError("four_point_gap needs x1 + x2 == y1 + y2");
  }
  const double w = y2 - y1;
  const double rhs = f(y1) + f(y2) - 2.0 * (y2 - x1) / w * f(x1 - y1) -
                     2.0 * (x1 - y1) / w * f(x2 - y1);
  return rhs - (f(x1) + f(x2));
}

}  // namespace superquad
