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

#include "superquad/function.hpp"
#include "superquad/matrix.hpp"
#include "superquad/positive_map.hpp"
#include "superquad/spectral.hpp"

namespace superquad {

/// Default relative tolerance for operator verdicts:
/// margin >= -tol * (1 + ||RHS||_max).
inline constexpr double kOperatorTolerance = 1e-8;

/// Absolute Loewner tolerance used when validating instance hypotheses.
inline constexpr double kInstanceTolerance = 1e-9;

/// Quadruple 0 <= A <= mI <= B <= C <= MI <= D with A + D = B + C, plus a
/// unital positive map.
struct MercerInstance {
  SymMatrix a;
  SymMatrix b;
  SymMatrix c;
  SymMatrix d;
  Interval iv;
  MapSpec phi;

  std::size_t order() const { return a.order(); }

  /// Throws RejectedInstance naming the first violated hypothesis. With
  /// `require_sum` false the A + D = B + C constraint is skipped.
  void validate(bool require_sum = true) const;
};

/// RHS - LHS of an operator inequality LHS <= RHS in the Loewner order.
struct OperatorClaimResult {
  SymMatrix lhs;
  SymMatrix rhs;
  double margin = 0.0;  // min eigenvalue of rhs - lhs
  double tolerance = kOperatorTolerance;

  double scale() const { return 1.0 + rhs.max_abs(); }
  bool holds() const { return margin >= -tolerance * scale(); }
};

OperatorClaimResult make_operator_result(SymMatrix lhs, SymMatrix rhs, double tolerance);

/// f(P(B)) + f(P(C)) + beta(P(B)) + beta(P(C))
///   <= P(f(A)) + P(f(D)) - P(f(mI - A)) - P(f(D - MI))
///      + [(P(A - D) + (M - m) I) / (M - m)] f(M - m).
/// Validates the instance first (RejectedInstance).
OperatorClaimResult mercer_operator_check(const FunctionSpec& f, const MercerInstance& inst,
                                          double tol = kOperatorTolerance);

/// Same expression without validating hypotheses; spectra must still lie
/// in the domains of f and beta. Used by counterexample search.
OperatorClaimResult evaluate_mercer_operator(const FunctionSpec& f, const MercerInstance& inst,
                                             double tol = kOperatorTolerance);

/// P(f(B)) + f(P(C)) + P(beta(B)) + beta(P(C))
///   <= P(f(A)) + f(P(D)) - P(f(mI - A)) - f(P(D) - MI)
///      + [(P(A - D) + (M - m) I) / (M - m)] f(M - m).
OperatorClaimResult mercer_mixed_check(const FunctionSpec& f, const MercerInstance& inst,
                                       double tol = kOperatorTolerance);

struct JensenMercerResult {
  /// f((M+m)I - P(C)) + beta(P(C)) + f(0)I <= (f(m) + f(M) - f(0)) I - P(beta(C))
  OperatorClaimResult literal;
  /// P(f((M+m)I - C)) + f(P(C)) + P(beta(C)) + beta(P(C)) <= (f(m) + f(M) - 2 f(0)) I,
  /// i.e. the mixed inequality at A = mI, B = (M+m)I - C, D = MI.
  OperatorClaimResult substituted;
};

/// Requires spectrum(C) in [m, M] (DomainError otherwise).
JensenMercerResult jensen_mercer_check(const FunctionSpec& f, const Interval& iv,
                                       const SymMatrix& c, const MapSpec& phi,
                                       double tol = kOperatorTolerance);

/// Throws RejectedInstance unless 0 <= A <= mI <= (A+D)/2 <= MI <= D.
void validate_midpoint_sandwich(const Interval& iv, const SymMatrix& a, const SymMatrix& d);

/// f(X) + beta(X) <= (f(A) + f(D))/2 - (f(mI - A) + f(D - MI))/2, X = (A+D)/2.
OperatorClaimResult midpoint_jensen_check(const FunctionSpec& f, const Interval& iv,
                                          const SymMatrix& a, const SymMatrix& d,
                                          double tol = kOperatorTolerance);

/// Midpoint operator convexity with no sandwich: f((A+D)/2) <= (f(A)+f(D))/2
/// for A, D >= 0.
OperatorClaimResult midpoint_convexity_check(const FunctionSpec& f, const SymMatrix& a,
                                             const SymMatrix& d,
                                             double tol = kOperatorTolerance);

/// Throws RejectedInstance unless 0 <= B, C <= MI <= B + C.
void validate_subadd_instance(double big_m, const SymMatrix& b, const SymMatrix& c);

/// f(B) + f(C) + beta(B) + beta(C) <= f(B + C) - f(B + C - MI), beta on [0, M].
OperatorClaimResult subadditivity_check(const FunctionSpec& f, double big_m, const SymMatrix& b,
                                        const SymMatrix& c, double tol = kOperatorTolerance);

struct NormClaimResult {
  double lhs = 0.0;  // ||f(B) + f(C)||
  double rhs = 0.0;  // ||f(B + C)||
  double margin = 0.0;
  double tolerance = kOperatorTolerance;

  double scale() const { return 1.0 + rhs; }
  bool holds() const { return margin >= -tolerance * scale(); }
};

/// ||f(B) + f(C)|| <= ||f(B + C)|| for B, C >= 0 and f = t^p, p >= 1.
NormClaimResult norm_subadditivity_check(const FunctionSpec& f, const SymMatrix& b,
                                         const SymMatrix& c, NormKind kind,
                                         double tol = kOperatorTolerance);

}  // namespace superquad
