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

#include "superquad/operator_inequalities.hpp"

#include <stdexcept>
#include <string>

#include "superquad/errors.hpp"

namespace superquad {

namespace {

void require_leq(const SymMatrix& lo, const SymMatrix& hi, const char* what) {
  if (!loewner_leq(lo, hi, kInstanceTolerance).holds) {
    throw RejectedInstance(std::string("hypothesis violated: ") + what);
  }
}

void require_same_order(std::initializer_list<const SymMatrix*> ms) {
  const std::size_t n = (*ms.begin())->order();
  for (const SymMatrix* m : ms) {
    if (m->order() != n) throw std::invalid_argument("operands must share one order");
  }
}

// [(P(A - D) + (M - m) I) / (M - m)] f(M - m)
SymMatrix endpoint_tail(const FunctionSpec& f, const Interval& iv, const SymMatrix& phi_diff) {
  const double w = iv.width();
  return (f(w) / w) * phi_diff.shifted(w);
}

}  // namespace

void MercerInstance::validate(bool require_sum) const {
  require_same_order({&a, &b, &c, &d});
  const std::size_t n = order();
  const SymMatrix low = SymMatrix::scalar(n, iv.lower);
  const SymMatrix high = SymMatrix::scalar(n, iv.upper);
  require_leq(SymMatrix::scalar(n, 0.0), a, "0 <= A");
  require_leq(a, low, "A <= mI");
  require_leq(low, b, "mI <= B");
  require_leq(b, c, "B <= C");
  require_leq(c, high, "C <= MI");
  require_leq(high, d, "MI <= D");
  if (require_sum &&
      max_abs_diff((a + d).matrix(), (b + c).matrix()) > kInstanceTolerance * (1.0 + iv.upper)) {
    throw RejectedInstance("hypothesis violated: A + D = B + C");
  }
}

OperatorClaimResult make_operator_result(SymMatrix lhs, SymMatrix rhs, double tolerance) {
  const double margin = min_eigenvalue(rhs - lhs);
  return OperatorClaimResult{std::move(lhs), std::move(rhs), margin, tolerance};
}

OperatorClaimResult evaluate_mercer_operator(const FunctionSpec& f, const MercerInstance& inst,
                                             double tol) {
  require_same_order({&inst.a, &inst.b, &inst.c, &inst.d});
  const auto& phi = inst.phi;
  const auto& iv = inst.iv;

  const auto pb = eig_sym(apply_map(phi, inst.b));
  const auto pc = eig_sym(apply_map(phi, inst.c));
  SymMatrix lhs = apply_function(f, pb) + apply_function(f, pc) + apply_beta(f, iv, pb) +
                  apply_beta(f, iv, pc);

  const SymMatrix below = (-inst.a).shifted(iv.lower);  // mI - A
  const SymMatrix above = inst.d.shifted(-iv.upper);    // D - MI
  SymMatrix rhs = apply_map(phi, apply_function(f, inst.a)) +
                  apply_map(phi, apply_function(f, inst.d)) -
                  apply_map(phi, apply_function(f, below)) -
                  apply_map(phi, apply_function(f, above)) +
                  endpoint_tail(f, iv, apply_map(phi, inst.a - inst.d));
  return make_operator_result(std::move(lhs), std::move(rhs), tol);
}

OperatorClaimResult mercer_operator_check(const FunctionSpec& f, const MercerInstance& inst,
                                          double tol) {
  inst.validate();
  return evaluate_mercer_operator(f, inst, tol);
}

OperatorClaimResult mercer_mixed_check(const FunctionSpec& f, const MercerInstance& inst,
                                       double tol) {
  inst.validate();
  const auto& phi = inst.phi;
  const auto& iv = inst.iv;

  const auto b = eig_sym(inst.b);
  const auto pc = eig_sym(apply_map(phi, inst.c));
  SymMatrix lhs = apply_map(phi, apply_function(f, b)) + apply_function(f, pc) +
                  apply_map(phi, apply_beta(f, iv, b)) + apply_beta(f, iv, pc);

  const SymMatrix pd = apply_map(phi, inst.d);
  const SymMatrix below = (-inst.a).shifted(iv.lower);
  SymMatrix rhs = apply_map(phi, apply_function(f, inst.a)) + apply_function(f, pd) -
                  apply_map(phi, apply_function(f, below)) -
                  apply_function(f, pd.shifted(-iv.upper)) +
                  endpoint_tail(f, iv, apply_map(phi, inst.a - inst.d));
  return make_operator_result(std::move(lhs), std::move(rhs), tol);
}

JensenMercerResult jensen_mercer_check(const FunctionSpec& f, const Interval& iv,
                                       const SymMatrix& c, const MapSpec& phi, double tol) {
  const auto spec = eig_sym(c);
  if (spec.values.front() < iv.lower - kInstanceTolerance ||
      spec.values.back() > iv.upper + kInstanceTolerance) {
    throw DomainError("spectrum of C must lie in [m, M]");
  }
  const std::size_t n = c.order();
  const double f0 = f(0.0);
  const double sum_ends = f(iv.lower) + f(iv.upper);

  const SymMatrix pc = apply_map(phi, c);
  const auto pc_spec = eig_sym(pc);
  const SymMatrix beta_pc = apply_beta(f, iv, pc_spec);
  const SymMatrix phi_beta_c = apply_map(phi, apply_beta(f, iv, spec));

  const double reflect = iv.lower + iv.upper;
  SymMatrix literal_lhs =
      apply_function(f, (-pc).shifted(reflect)) + beta_pc + SymMatrix::scalar(n, f0);
  SymMatrix literal_rhs = SymMatrix::scalar(n, sum_ends - f0) - phi_beta_c;

  SymMatrix sub_lhs = apply_map(phi, apply_function(f, (-c).shifted(reflect))) +
                      apply_function(f, pc_spec) + phi_beta_c + beta_pc;
  SymMatrix sub_rhs = SymMatrix::scalar(n, sum_ends - 2.0 * f0);

  return {make_operator_result(std::move(literal_lhs), std::move(literal_rhs), tol),
          make_operator_result(std::move(sub_lhs), std::move(sub_rhs), tol)};
}

void validate_midpoint_sandwich(const Interval& iv, const SymMatrix& a, const SymMatrix& d) {
  require_same_order({&a, &d});
  const std::size_t n = a.order();
  const SymMatrix mid = 0.5 * (a + d);
  require_leq(SymMatrix::scalar(n, 0.0), a, "0 <= A");
  require_leq(a, SymMatrix::scalar(n, iv.lower), "A <= mI");
  require_leq(SymMatrix::scalar(n, iv.lower), mid, "mI <= (A+D)/2");
  require_leq(mid, SymMatrix::scalar(n, iv.upper), "(A+D)/2 <= MI");
  require_leq(SymMatrix::scalar(n, iv.upper), d, "MI <= D");
}

OperatorClaimResult midpoint_jensen_check(const FunctionSpec& f, const Interval& iv,
                                          const SymMatrix& a, const SymMatrix& d, double tol) {
  validate_midpoint_sandwich(iv, a, d);
  const auto mid = eig_sym(0.5 * (a + d));
  SymMatrix lhs = apply_function(f, mid) + apply_beta(f, iv, mid);
  SymMatrix rhs = 0.5 * (apply_function(f, a) + apply_function(f, d)) -
                  0.5 * (apply_function(f, (-a).shifted(iv.lower)) +
                         apply_function(f, d.shifted(-iv.upper)));
  return make_operator_result(std::move(lhs), std::move(rhs), tol);
}

OperatorClaimResult midpoint_convexity_check(const FunctionSpec& f, const SymMatrix& a,
                                             const SymMatrix& d, double tol) {
  require_same_order({&a, &d});
  SymMatrix lhs = apply_function(f, 0.5 * (a + d));
  SymMatrix rhs = 0.5 * (apply_function(f, a) + apply_function(f, d));
  return make_operator_result(std::move(lhs), std::move(rhs), tol);
}

void validate_subadd_instance(double big_m, const SymMatrix& b, const SymMatrix& c) {
  require_same_order({&b, &c});
  if (!(big_m > 0.0)) throw RejectedInstance("hypothesis violated: M > 0");
  const std::size_t n = b.order();
  const SymMatrix zero = SymMatrix::scalar(n, 0.0);
  const SymMatrix high = SymMatrix::scalar(n, big_m);
  require_leq(zero, b, "0 <= B");
  require_leq(zero, c, "0 <= C");
  require_leq(b, high, "B <= MI");
  require_leq(c, high, "C <= MI");
  require_leq(high, b + c, "MI <= B + C");
}

OperatorClaimResult subadditivity_check(const FunctionSpec& f, double big_m, const SymMatrix& b,
                                        const SymMatrix& c, double tol) {
  validate_subadd_instance(big_m, b, c);
  const Interval iv(0.0, big_m);
  const auto eb = eig_sym(b);
  const auto ec = eig_sym(c);
  const SymMatrix sum = b + c;
  SymMatrix lhs = apply_function(f, eb) + apply_function(f, ec) + apply_beta(f, iv, eb) +
                  apply_beta(f, iv, ec);
  SymMatrix rhs = apply_function(f, sum) - apply_function(f, sum.shifted(-big_m));
  return make_operator_result(std::move(lhs), std::move(rhs), tol);
}

NormClaimResult norm_subadditivity_check(const FunctionSpec& f, const SymMatrix& b,
                                         const SymMatrix& c, NormKind kind, double tol) {
  require_same_order({&b, &c});
  if (f.kind() != FunctionSpec::Kind::kPower || f.exponent() < 1.0) {
    throw DomainError("norm sub-additivity needs f = t^p with p >= 1");
  }
  NormClaimResult r;
  r.tolerance = tol;
  r.lhs = norm(apply_function(f, b) + apply_function(f, c), kind);
  r.rhs = norm(apply_function(f, b + c), kind);
  r.margin = r.rhs - r.lhs;
  return r;
}

}  // namespace superquad
