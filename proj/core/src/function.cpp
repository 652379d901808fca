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

#include "superquad/function.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <system_error>

#include "superquad/errors.hpp"

namespace superquad {

namespace {

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw std::logic_error("to_chars failed");
  return std::string(buf, end);
}

}  // namespace

FunctionSpec::FunctionSpec(Kind kind, double exponent)
    : kind_(kind), exponent_(exponent) {
  if (!(exponent > 0.0) || !std::isfinite(exponent)) {
    throw DomainError("function exponent must be positive and finite, got " +
                      format_double(exponent));
  }
}

FunctionSpec FunctionSpec::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("function spec must look like pow:<p> or negpow:<q>, got '" +
                     std::string(text) + "'");
  }
  auto head = text.substr(0, colon);
  auto tail = text.substr(colon + 1);

  Kind kind;
  if (head == "pow") {
    kind = Kind::kPower;
  } else if (head == "negpow") {
    kind = Kind::kNegPower;
  } else {
    throw ParseError("unknown function family '" + std::string(head) + "'");
  }

  double exponent = 0.0;
  auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), exponent);
  if (ec != std::errc{} || ptr != tail.data() + tail.size() || tail.empty()) {
    throw ParseError("bad exponent '" + std::string(tail) + "'");
  }
  if (!(exponent > 0.0) || !std::isfinite(exponent)) {
    throw ParseError("exponent must be positive, got '" + std::string(tail) + "'");
  }
  return FunctionSpec(kind, exponent);
}

std::string FunctionSpec::to_string() const {
  return (kind_ == Kind::kPower ? "pow:" : "negpow:") + format_double(exponent_);
}

bool FunctionSpec::claimed_superquadratic() const {
  if (kind_ == Kind::kPower) return exponent_ >= 2.0;
  return exponent_ >= 1.0 && exponent_ <= 2.0;
}

bool FunctionSpec::is_convex() const {
  if (kind_ == Kind::kPower) return exponent_ >= 1.0;
  return exponent_ <= 1.0;
}

double FunctionSpec::operator()(double t) const {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw DomainError("catalog functions are defined on [0, inf), got t = " +
                      format_double(t));
  }
  double v = std::pow(t, exponent_);
  return kind_ == Kind::kPower ? v : -v;
}

Interval::Interval(double lower_, double upper_) : lower(lower_), upper(upper_) {
  if (!std::isfinite(lower) || !std::isfinite(upper) || lower < 0.0 || !(upper > lower)) {
    throw DomainError("interval requires 0 <= m < M, got [" + format_double(lower) + ", " +
                      format_double(upper) + "]");
  }
}

double eval_f(const FunctionSpec& f, double t) { return f(t); }

double beta_eval(const FunctionSpec& f, const Interval& iv, double t) {
  if (!iv.contains(t)) {
    throw DomainError("beta evaluated at " + format_double(t) + " outside [" +
                      format_double(iv.lower) + ", " + format_double(iv.upper) + "]");
  }
  const double w = iv.width();
  return (t - iv.lower) / w * f(iv.upper - t) + (iv.upper - t) / w * f(t - iv.lower);
}

double beta_p_closed(double p, const Interval& iv, double x) {
  if (!(p >= 1.0)) throw DomainError("beta_p requires p >= 1");
  if (!iv.contains(x)) {
    throw DomainError("beta_p evaluated at " + format_double(x) + " outside the interval");
  }
  const double right = iv.upper - x;
  const double left = x - iv.lower;
  return right * left / iv.width() * (std::pow(right, p - 1.0) + std::pow(left, p - 1.0));
}

double SuperquadraticityCertificate::slope_constant(std::size_t i) const {
  const auto& w = windows.at(i);
  if (std::isinf(w.lower)) return w.upper;
  if (std::isinf(w.upper)) return w.lower;
  return 0.5 * (w.lower + w.upper);
}

double SuperquadraticityCertificate::worst_width() const {
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& w : windows) worst = std::min(worst, w.upper - w.lower);
  return worst;
}

SuperquadraticityCertificate certify_superquadratic(const FunctionSpec& f, double horizon,
                                                    std::size_t grid_size) {
  if (grid_size < 3) throw std::invalid_argument("certification grid needs >= 3 points");
  if (!(horizon > 0.0) || !std::isfinite(horizon)) {
    throw std::invalid_argument("certification horizon must be positive");
  }

  SuperquadraticityCertificate cert;
  cert.tolerance = 1e-9 * (1.0 + std::abs(f(horizon)));
  cert.grid.resize(grid_size);
  const double step = horizon / static_cast<double>(grid_size - 1);
  for (std::size_t i = 0; i < grid_size; ++i) cert.grid[i] = step * static_cast<double>(i);
  cert.grid.back() = horizon;

  std::vector<double> values(grid_size);
  std::transform(cert.grid.begin(), cert.grid.end(), values.begin(),
                 [&](double t) { return f(t); });

  // y == x forces f(0) <= 0.
  const bool origin_ok = f(0.0) <= cert.tolerance;

  constexpr double kInf = std::numeric_limits<double>::infinity();
  cert.windows.reserve(grid_size);
  for (std::size_t i = 0; i < grid_size; ++i) {
    SlopeWindow w;
    w.x = cert.grid[i];
    w.lower = -kInf;
    w.upper = kInf;
    for (std::size_t j = 0; j < grid_size; ++j) {
      if (j == i) continue;
      const double dy = cert.grid[j] - w.x;
      const double q = (values[j] - values[i] - f(std::abs(dy))) / dy;
      if (dy > 0.0) {
        if (q < w.upper) {
          w.upper = q;
          w.upper_arg = j;
        }
      } else if (q > w.lower) {
        w.lower = q;
        w.lower_arg = j;
      }
    }
    w.nonempty = origin_ok && w.lower <= w.upper + cert.tolerance;
    if (!w.nonempty && cert.holds) {
      cert.holds = false;
      cert.witness = CertificateWitness{w.x, cert.grid[w.lower_arg], cert.grid[w.upper_arg],
                                        w.lower, w.upper};
    }
    cert.windows.push_back(w);
  }
  return cert;
}

}  // namespace superquad
