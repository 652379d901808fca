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

#include "superquad/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "superquad/errors.hpp"

namespace superquad {

namespace {

double off_diagonal_mass(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

// Zeroes a(p, q) with a plane rotation, accumulating it into v.
void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
  const double c = 1.0 / std::hypot(t, 1.0);
  const double s = t * c;
  const std::size_t n = a.rows();

  for (std::size_t k = 0; k < n; ++k) {
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double apk = a(p, k);
    const double aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

double clamp_to(double v, double lo, double hi, const char* what) {
  if (v < lo - kSpectralClamp || v > hi + kSpectralClamp) {
    throw DomainError(std::string(what) + ": eigenvalue " + std::to_string(v) +
                      " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return std::clamp(v, lo, hi);
}

}  // namespace

SymMatrix SpectralDecomposition::reconstruct() const {
  return SymMatrix::from_spectrum(vectors, values);
}

SymMatrix SpectralDecomposition::map(const std::function<double(double)>& g) const {
  std::vector<double> mapped(values.size());
  std::transform(values.begin(), values.end(), mapped.begin(), g);
  return SymMatrix::from_spectrum(vectors, mapped);
}

SpectralDecomposition eig_sym(const SymMatrix& input, const JacobiOptions& opts) {
  Matrix a = input.matrix();
  const std::size_t n = a.rows();
  Matrix v = Matrix::identity(n);
  const double threshold = opts.relative_tol * a.frobenius();

  bool converged = off_diagonal_mass(a) <= threshold;
  for (int sweep = 0; sweep < opts.max_sweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    converged = off_diagonal_mass(a) <= threshold;
  }
  if (!converged) throw NumericError("Jacobi eigensolver did not converge");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

  SpectralDecomposition d;
  d.values.resize(n);
  d.vectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    d.values[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) d.vectors(i, k) = v(i, order[k]);
  }
  return d;
}

std::vector<double> eigenvalues(const SymMatrix& a) { return eig_sym(a).values; }

double min_eigenvalue(const SymMatrix& a) { return eig_sym(a).values.front(); }

double max_eigenvalue(const SymMatrix& a) { return eig_sym(a).values.back(); }

SymMatrix apply_function(const FunctionSpec& f, const SpectralDecomposition& d) {
  return d.map([&](double t) {
    return f(clamp_to(t, 0.0, std::numeric_limits<double>::infinity(), "apply_function"));
  });
}

SymMatrix apply_function(const FunctionSpec& f, const SymMatrix& a) {
  return apply_function(f, eig_sym(a));
}

SymMatrix apply_beta(const FunctionSpec& f, const Interval& iv, const SpectralDecomposition& d) {
  return d.map([&](double t) {
    return beta_eval(f, iv, clamp_to(t, iv.lower, iv.upper, "apply_beta"));
  });
}

SymMatrix apply_beta(const FunctionSpec& f, const Interval& iv, const SymMatrix& a) {
  return apply_beta(f, iv, eig_sym(a));
}

LoewnerResult loewner_leq(const SymMatrix& a, const SymMatrix& b, double tol) {
  if (a.order() != b.order()) throw std::invalid_argument("Loewner comparison of unequal orders");
  LoewnerResult r;
  r.margin = min_eigenvalue(b - a);
  r.holds = r.margin >= -tol;
  return r;
}

double norm(const SymMatrix& a, NormKind kind) {
  switch (kind) {
    case NormKind::kFrobenius:
      return a.matrix().frobenius();
    case NormKind::kOperator: {
      const auto ev = eigenvalues(a);
      return std::max(std::abs(ev.front()), std::abs(ev.back()));
    }
    case NormKind::kTrace: {
      double s = 0.0;
      for (double v : eigenvalues(a)) s += std::abs(v);
      return s;
    }
  }
  throw std::logic_error("unknown norm kind");
}

}  // namespace superquad
