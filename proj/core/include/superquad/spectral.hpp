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
#include <functional>
#include <vector>

#include "superquad/function.hpp"
#include "superquad/matrix.hpp"

namespace superquad {

/// Eigenvalues within this distance outside a declared interval are clamped
/// onto it before f or beta is applied; anything further is a DomainError.
inline constexpr double kSpectralClamp = 1e-10;

struct JacobiOptions {
  double relative_tol = 1e-12;  // off-diagonal Frobenius mass vs ||A||_F
  int max_sweeps = 100;
};

/// A = Q diag(values) Q^T with Q orthogonal and values ascending.
struct SpectralDecomposition {
  Matrix vectors;
  std::vector<double> values;

  std::size_t order() const { return values.size(); }
  SymMatrix reconstruct() const;
  /// Q diag(g(values)) Q^T.
  SymMatrix map(const std::function<double(double)>& g) const;
};

/// Cyclic Jacobi eigensolver. Throws NumericError if the off-diagonal mass
/// does not fall below relative_tol * ||A||_F within max_sweeps.
SpectralDecomposition eig_sym(const SymMatrix& a, const JacobiOptions& opts = {});

std::vector<double> eigenvalues(const SymMatrix& a);
double min_eigenvalue(const SymMatrix& a);
double max_eigenvalue(const SymMatrix& a);

/// f(A) for spectrum(A) in [-kSpectralClamp, inf).
SymMatrix apply_function(const FunctionSpec& f, const SymMatrix& a);
SymMatrix apply_function(const FunctionSpec& f, const SpectralDecomposition& d);

/// beta(A) for spectrum(A) in [m - kSpectralClamp, M + kSpectralClamp].
SymMatrix apply_beta(const FunctionSpec& f, const Interval& iv, const SymMatrix& a);
SymMatrix apply_beta(const FunctionSpec& f, const Interval& iv, const SpectralDecomposition& d);

struct LoewnerResult {
  bool holds = false;
  double margin = 0.0;  // min eigenvalue of B - A
};

/// A <= B in the Loewner order, i.e. min eig(B - A) >= -tol.
LoewnerResult loewner_leq(const SymMatrix& a, const SymMatrix& b, double tol = 0.0);

enum class NormKind { kOperator, kTrace, kFrobenius };

/// Unitarily invariant norms of a symmetric matrix.
double norm(const SymMatrix& a, NormKind kind);

}  // namespace superquad
