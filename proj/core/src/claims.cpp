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

#include "superquad/claims.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>

#include "superquad/errors.hpp"
#include "superquad/operator_inequalities.hpp"
#include "superquad/random.hpp"
#include "superquad/sampler.hpp"
#include "superquad/scalar_inequalities.hpp"
#include "superquad/spectral.hpp"

namespace superquad {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Margin of one trial. `aux` carries named secondary margins (already
// divided by their own scale) that are aggregated into the report details.
struct Trial {
  double margin = 0.0;
  double scale = 1.0;
  Json witness;
  std::vector<std::pair<std::string, double>> aux;
};

struct TrialContext {
  const FunctionSpec& f;
  std::size_t n;
  const MapDescriptor* map;
  double tol;
  bool want_witness;
};

using TrialFn = std::function<Trial(const TrialContext&, Rng&)>;

double scale_of(const FunctionSpec& f, std::initializer_list<double> points) {
  double s = 0.0;
  for (double t : points) s = std::max(s, std::abs(f(t)));
  return 1.0 + s;
}

// Scalar instances live on [m, M] with m in [0, 5] and M - m in [0.1, 5].
Interval scalar_interval(Rng& rng) {
  const double m = rng.uniform(0.0, 5.0);
  return Interval(m, m + rng.uniform(0.1, 5.0));
}

Json interval_json(const Interval& iv) {
  return Json{{"m", iv.lower}, {"M", iv.upper}};
}

Trial chain_trial(const ChainResult& c, Json witness) {
  return {c.worst_margin(), c.scale(), std::move(witness), {}};
}

Trial from_operator(const OperatorClaimResult& r) { return {r.margin, r.scale(), {}, {}}; }

Json operator_witness(const Interval& iv, std::initializer_list<std::pair<const char*, const SymMatrix*>> ms,
                      const MapSpec* phi) {
  Json w = interval_json(iv);
  for (const auto& [name, m] : ms) w[name] = matrix_to_json(*m);
  if (phi != nullptr) w["map"] = describe(*phi);
  return w;
}

// ---- scalar claims -------------------------------------------------------

Trial jensen_sq_trial(const TrialContext& ctx, Rng& rng) {
  const double x = rng.uniform(0.0, 10.0);
  const double y = rng.uniform(0.0, 10.0);
  const double l = rng.uniform(0.0, 1.0);
  Trial t{jensen_sq_gap(ctx.f, x, y, l), scale_of(ctx.f, {x, y}), {}, {}};
  if (ctx.want_witness) t.witness = Json{{"x", x}, {"y", y}, {"lambda", l}};
  return t;
}

Trial mercer_scalar_trial(const TrialContext& ctx, Rng& rng) {
  const Interval iv = scalar_interval(rng);
  const std::size_t k = 1 + rng.below(5);
  std::vector<double> xs(k), ws(k);
  double total = 0.0;
  for (std::size_t j = 0; j < k; ++j) {
    xs[j] = rng.uniform(iv.lower, iv.upper);
    ws[j] = rng.uniform(0.05, 1.0);
    total += ws[j];
  }
  for (double& w : ws) w /= total;
  const WeightedSample s(xs, ws);
  Trial t{mercer_scalar_gap(ctx.f, iv, s), scale_of(ctx.f, {iv.lower, iv.upper}), {}, {}};
  if (ctx.want_witness) {
    t.witness = interval_json(iv);
    t.witness["points"] = xs;
    t.witness["weights"] = ws;
  }
  return t;
}

Trial lemma_nabla_trial(const TrialContext& ctx, Rng& rng) {
  const Interval iv = scalar_interval(rng);
  const double x = rng.uniform(iv.lower, iv.upper);
  const double y = rng.uniform(iv.lower, iv.upper);
  const double l = rng.uniform(0.0, 1.0);
  Trial t{lemma_nabla_gap(ctx.f, iv, x, y, l), scale_of(ctx.f, {iv.lower, iv.upper}), {}, {}};
  if (ctx.want_witness) {
    t.witness = interval_json(iv);
    t.witness.update(Json{{"x", x}, {"y", y}, {"lambda", l}});
  }
  return t;
}

template <class Chain>
Trial interval_chain_trial(const TrialContext& ctx, Rng& rng, Chain chain) {
  const Interval iv = scalar_interval(rng);
  double x = rng.uniform(iv.lower, iv.upper);
  double y = rng.uniform(iv.lower, iv.upper);
  while (x == y) y = rng.uniform(iv.lower, iv.upper);
  Json w;
  if (ctx.want_witness) {
    w = interval_json(iv);
    w.update(Json{{"x", x}, {"y", y}});
  }
  return chain_trial(chain(iv, x, y), std::move(w));
}

Trial hh_sq_trial(const TrialContext& ctx, Rng& rng) {
  double x = rng.uniform(0.0, 10.0);
  double y = rng.uniform(0.0, 10.0);
  while (x == y) y = rng.uniform(0.0, 10.0);
  if (x > y) std::swap(x, y);
  Json w;
  if (ctx.want_witness) w = Json{{"x", x}, {"y", y}};
  return chain_trial(hh_sq_chain(ctx.f, x, y), std::move(w));
}

void require_power_ge1(const FunctionSpec& f, const std::string& claim) {
  if (f.kind() != FunctionSpec::Kind::kPower || f.exponent() < 1.0) {
    throw std::invalid_argument(claim + " needs pow:<p> with p >= 1");
  }
}

Trial superadditive_trial(const TrialContext& ctx, Rng& rng) {
  const double x = rng.uniform(0.0, 10.0);
  double y = rng.uniform(0.0, 10.0);
  while (x + y == 0.0) y = rng.uniform(0.0, 10.0);
  Trial t{superadditive_gap(ctx.f, x, y), scale_of(ctx.f, {x, y, x + y}), {}, {}};
  if (ctx.want_witness) t.witness = Json{{"x", x}, {"y", y}};
  return t;
}

Trial four_point_trial(const TrialContext& ctx, Rng& rng) {
  double y1 = rng.uniform(0.0, 10.0);
  double y2 = rng.uniform(0.0, 10.0);
  while (y1 == y2) y2 = rng.uniform(0.0, 10.0);
  if (y1 > y2) std::swap(y1, y2);
  const double x1 = rng.uniform(y1, 0.5 * (y1 + y2));
  // x2 = y1 + y2 - x1 may round below x1 when x1 sits at the midpoint
  const double x2 = std::max(x1, y1 + y2 - x1);
  Trial t{four_point_gap(ctx.f, y1, x1, x2, y2), scale_of(ctx.f, {y1, y2}), {}, {}};
  if (ctx.want_witness) t.witness = Json{{"y1", y1}, {"x1", x1}, {"x2", x2}, {"y2", y2}};
  return t;
}

// ---- operator claims -----------------------------------------------------

Trial mercer_op_trial(const TrialContext& ctx, Rng& rng, bool mixed) {
  const Interval iv = sample_interval(rng);
  const MapSpec phi = instantiate_map(*ctx.map, ctx.n, rng);
  const MercerInstance inst = sample_mercer_instance(ctx.n, iv, phi, rng);
  Trial t = from_operator(mixed ? mercer_mixed_check(ctx.f, inst, ctx.tol)
                                : mercer_operator_check(ctx.f, inst, ctx.tol));
  if (ctx.want_witness) {
    t.witness = operator_witness(iv, {{"A", &inst.a}, {"B", &inst.b}, {"C", &inst.c}, {"D", &inst.d}},
                                 &phi);
  }
  return t;
}

Trial jensen_mercer_trial(const TrialContext& ctx, Rng& rng) {
  const Interval iv = sample_interval(rng);
  const MapSpec phi = instantiate_map(*ctx.map, ctx.n, rng);
  const SymMatrix c = sample_with_spectrum(ctx.n, iv.lower, iv.upper, rng);
  const JensenMercerResult r = jensen_mercer_check(ctx.f, iv, c, phi, ctx.tol);
  Trial t = from_operator(r.substituted);
  t.aux.emplace_back("literal", r.literal.margin / r.literal.scale());
  if (ctx.want_witness) t.witness = operator_witness(iv, {{"C", &c}}, &phi);
  return t;
}

Trial midpoint_trial(const TrialContext& ctx, Rng& rng) {
  const Interval iv = sample_interval(rng);
  const auto [a, d] = sample_midpoint_instance(ctx.n, iv, rng);
  Trial t = from_operator(midpoint_jensen_check(ctx.f, iv, a, d, ctx.tol));
  if (ctx.want_witness) t.witness = operator_witness(iv, {{"A", &a}, {"D", &d}}, nullptr);
  return t;
}

Trial subadd_trial(const TrialContext& ctx, Rng& rng) {
  const double big_m = rng.uniform(1.0, 4.0);
  const auto [b, c] = sample_subadd_instance(ctx.n, big_m, rng);
  Trial t = from_operator(subadditivity_check(ctx.f, big_m, b, c, ctx.tol));
  if (ctx.want_witness) {
    t.witness = Json{{"M", big_m}, {"B", matrix_to_json(b)}, {"C", matrix_to_json(c)}};
  }
  return t;
}

Trial subadd_norm_trial(const TrialContext& ctx, Rng& rng) {
  const SymMatrix b = sample_with_spectrum(ctx.n, 0.0, rng.uniform(0.5, 3.0), rng);
  const SymMatrix c = sample_with_spectrum(ctx.n, 0.0, rng.uniform(0.5, 3.0), rng);
  Trial t{kInf, 1.0, {}, {}};
  constexpr std::pair<NormKind, const char*> kNorms[] = {
      {NormKind::kOperator, "operator"}, {NormKind::kTrace, "trace"}, {NormKind::kFrobenius, "frobenius"}};
  for (const auto& [kind, name] : kNorms) {
    const NormClaimResult r = norm_subadditivity_check(ctx.f, b, c, kind, ctx.tol);
    t.aux.emplace_back(name, r.margin / r.scale());
    if (r.margin / r.scale() < t.margin / t.scale) {
      t.margin = r.margin;
      t.scale = r.scale();
    }
  }
  if (ctx.want_witness) t.witness = Json{{"B", matrix_to_json(b)}, {"C", matrix_to_json(c)}};
  return t;
}

struct ClaimEntry {
  ClaimInfo info;
  TrialFn trial;  // empty for sq-def
  std::function<void(const FunctionSpec&)> require;
};

const std::vector<ClaimEntry>& entries() {
  static const std::vector<ClaimEntry> table = [] {
    auto any = [](const FunctionSpec&) {};
    std::vector<ClaimEntry> t;
    auto scalar = [&](std::string id, std::string summary, TrialFn fn,
                      std::function<void(const FunctionSpec&)> req) {
      t.push_back({{std::move(id), ClaimKind::kScalar, false, std::move(summary)}, std::move(fn),
                   req ? std::move(req) : any});
    };
    auto op = [&](std::string id, bool takes_map, std::string summary, TrialFn fn,
                  std::function<void(const FunctionSpec&)> req) {
      t.push_back({{std::move(id), ClaimKind::kOperator, takes_map, std::move(summary)},
                   std::move(fn), req ? std::move(req) : any});
    };

    scalar("sq-def", "grid certificate of superquadraticity on [0, 10]; --trials is the grid size",
           nullptr, nullptr);
    scalar("jensen-sq", "two-point Jensen inequality with superquadratic correction",
           jensen_sq_trial, nullptr);
    scalar("mercer-scalar", "classical Mercer inequality (convex f)", mercer_scalar_trial,
           [](const FunctionSpec& f) {
             if (!f.is_convex()) throw std::invalid_argument("mercer-scalar needs a convex f");
           });
    scalar("lemma-nabla", "weighted two-point Mercer bound with beta correction",
           lemma_nabla_trial, nullptr);
    scalar("hh-chain-1", "Mercer/Hermite-Hadamard chain on the mean of f(m + M - u)",
           [](const TrialContext& ctx, Rng& rng) {
             return interval_chain_trial(ctx, rng, [&](const Interval& iv, double x, double y) {
               return hh_mercer_chain_1(ctx.f, iv, x, y);
             });
           },
           nullptr);
    scalar("hh-chain-2", "Mercer/Hermite-Hadamard chain on the means of f and beta",
           [](const TrialContext& ctx, Rng& rng) {
             return interval_chain_trial(ctx, rng, [&](const Interval& iv, double x, double y) {
               return hh_mercer_chain_2(ctx.f, iv, x, y);
             });
           },
           nullptr);
    scalar("hh-sq", "Hermite-Hadamard chain for superquadratic f on [x, y]", hh_sq_trial, nullptr);
    scalar("power-chain", "closed-form chain for t^p, reversed for p < 2",
           [](const TrialContext& ctx, Rng& rng) {
             return interval_chain_trial(ctx, rng, [&](const Interval& iv, double x, double y) {
               return power_chain(ctx.f.exponent(), iv, x, y);
             });
           },
           [](const FunctionSpec& f) { require_power_ge1(f, "power-chain"); });
    scalar("square-identity", "the t^2 chain collapses to an identity",
           [](const TrialContext& ctx, Rng& rng) {
             return interval_chain_trial(ctx, rng, [](const Interval& iv, double x, double y) {
               return power_chain(2.0, iv, x, y);
             });
           },
           [](const FunctionSpec& f) {
             if (f != FunctionSpec::power(2.0)) {
               throw std::invalid_argument("square-identity needs pow:2");
             }
           });
    scalar("superadditive", "superadditivity with the 2(y f(x) + x f(y))/(x + y) correction",
           superadditive_trial, nullptr);
    scalar("four-point", "four-point bound for y1 <= x1 <= x2 <= y2, x1 + x2 = y1 + y2",
           four_point_trial, nullptr);

    op("mercer-op", true, "four-operator Mercer bound with a positive map",
       [](const TrialContext& ctx, Rng& rng) { return mercer_op_trial(ctx, rng, false); }, nullptr);
    op("mercer-op-mixed", true, "four-operator bound with the map applied inside for B and D",
       [](const TrialContext& ctx, Rng& rng) { return mercer_op_trial(ctx, rng, true); }, nullptr);
    op("jensen-mercer-op", true,
       "operator Jensen-Mercer bound; verdict from the substituted form, literal form in details",
       jensen_mercer_trial, nullptr);
    op("midpoint-op", false, "midpoint bound under A <= mI <= (A+D)/2 <= MI <= D", midpoint_trial,
       nullptr);
    op("subadd-op", false, "operator sub-additivity under 0 <= B, C <= MI <= B + C", subadd_trial,
       nullptr);
    op("subadd-norm", false, "||f(B) + f(C)|| <= ||f(B + C)|| in operator, trace, Frobenius norms",
       subadd_norm_trial,
       [](const FunctionSpec& f) { require_power_ge1(f, "subadd-norm"); });
    return t;
  }();
  return table;
}

const ClaimEntry& entry(std::string_view id) {
  for (const auto& e : entries())
    if (e.info.id == id) return e;
  throw std::invalid_argument("unknown claim '" + std::string(id) + "'");
}

struct AuxStats {
  double worst = kInf;
  int violations = 0;
};

ClaimReport certify_report(const SuiteConfig& cfg, ClaimReport r) {
  if (cfg.trials < 3) throw std::invalid_argument("sq-def needs --trials >= 3 (grid size)");
  const auto cert = certify_superquadratic(cfg.fn, kDefaultCertificationHorizon,
                                           static_cast<std::size_t>(cfg.trials));
  const double scale = 1.0 + std::abs(cfg.fn(kDefaultCertificationHorizon));
  r.tolerance = cert.tolerance / scale;
  r.evaluated = static_cast<int>(cert.windows.size());
  r.worst_margin = kInf;
  r.best_relative_margin = -kInf;
  for (const auto& w : cert.windows) {
    if (!w.nonempty) ++r.violations;
    const double width = w.upper - w.lower;
    r.worst_margin = std::min(r.worst_margin, width);
    r.best_relative_margin = std::max(r.best_relative_margin, width / scale);
  }
  r.worst_relative_margin = r.worst_margin / scale;
  if (cert.witness) {
    const auto& w = *cert.witness;
    r.witness = Json{{"x", w.x},
                     {"y_lower", w.y_lower},
                     {"y_upper", w.y_upper},
                     {"slope_lower", number_to_json(w.lower)},
                     {"slope_upper", number_to_json(w.upper)}};
  }
  r.details = Json{{"horizon", kDefaultCertificationHorizon},
                   {"claimed_superquadratic", cfg.fn.claimed_superquadratic()},
                   {"f_origin", cfg.fn(0.0)}};
  return r;
}

}  // namespace

const std::vector<ClaimInfo>& claim_registry() {
  static const std::vector<ClaimInfo> infos = [] {
    std::vector<ClaimInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const ClaimInfo* find_claim(std::string_view id) {
  for (const auto& info : claim_registry())
    if (info.id == id) return &info;
  return nullptr;
}

Json ClaimReport::to_json() const {
  Json j;
  j["claim"] = claim;
  j["function"] = function;
  j["dim"] = dim;
  j["map"] = map;
  j["trials"] = trials;
  j["evaluated"] = evaluated;
  j["violations"] = violations;
  j["sampling_failures"] = sampling_failures;
  j["verdict"] = holds() ? "holds" : "fails";
  j["worst_margin"] = number_to_json(worst_margin);
  j["worst_relative_margin"] = number_to_json(worst_relative_margin);
  j["best_relative_margin"] = number_to_json(best_relative_margin);
  j["tolerance"] = tolerance;
  j["seed"] = seed;
  j["stream"] = stream;
  j["witness"] = witness ? *witness : Json();
  j["details"] = details;
  if (wall_time_ms) j["wall_time_ms"] = *wall_time_ms;
  return j;
}

ClaimReport run_suite(const SuiteConfig& cfg) {
  const ClaimEntry& e = entry(cfg.claim);
  e.require(cfg.fn);
  if (cfg.trials < 1) throw std::invalid_argument("--trials must be >= 1");
  if (e.info.kind == ClaimKind::kOperator && cfg.dim == 0) {
    throw std::invalid_argument("--dim must be >= 1");
  }
  if (cfg.map && !e.info.takes_map) {
    throw std::invalid_argument(cfg.claim + " does not take a positive map");
  }
  if (cfg.tolerance && !(*cfg.tolerance >= 0.0)) {
    throw std::invalid_argument("--tol must be non-negative");
  }

  const auto start = std::chrono::steady_clock::now();
  ClaimReport r;
  r.claim = cfg.claim;
  r.function = cfg.fn.to_string();
  r.dim = e.info.kind == ClaimKind::kOperator ? cfg.dim : 1;
  r.map = !e.info.takes_map ? "none" : cfg.map ? cfg.map->to_string() : "family";
  r.trials = cfg.trials;
  r.seed = cfg.seed;
  r.stream = cfg.stream;
  r.tolerance = cfg.tolerance.value_or(e.info.kind == ClaimKind::kScalar ? kScalarTolerance
                                                                          : kOperatorTolerance);

  if (!e.trial) {
    r = certify_report(cfg, std::move(r));
  } else {
    const Rng base(cfg.seed, cfg.stream);
    const auto family = default_map_family();
    auto run_trial = [&](int i, bool want_witness) {
      const MapDescriptor& desc = cfg.map ? *cfg.map : family[static_cast<std::size_t>(i) % family.size()];
      Rng rng = base.fork(static_cast<std::uint64_t>(i));
      return e.trial(TrialContext{cfg.fn, cfg.dim, &desc, r.tolerance, want_witness}, rng);
    };

    std::map<std::string, AuxStats> aux;
    std::optional<int> witness_trial;
    double witness_rel = kInf;
    r.worst_margin = kInf;
    r.worst_relative_margin = kInf;
    r.best_relative_margin = -kInf;
    for (int i = 0; i < cfg.trials; ++i) {
      Trial t;
      try {
        t = run_trial(i, false);
      } catch (const SamplingFailure&) {
        ++r.sampling_failures;
        continue;
      }
      ++r.evaluated;
      const double rel = t.margin / t.scale;
      r.worst_margin = std::min(r.worst_margin, t.margin);
      r.worst_relative_margin = std::min(r.worst_relative_margin, rel);
      r.best_relative_margin = std::max(r.best_relative_margin, rel);
      if (!(rel >= -r.tolerance)) {
        ++r.violations;
        if (!witness_trial || rel < witness_rel) {
          witness_trial = i;
          witness_rel = rel;
        }
      }
      for (const auto& [name, value] : t.aux) {
        AuxStats& s = aux[name];
        s.worst = std::min(s.worst, value);
        if (!(value >= -r.tolerance)) ++s.violations;
      }
    }
    if (witness_trial) {
      Trial replay = run_trial(*witness_trial, true);
      replay.witness["trial"] = *witness_trial;
      replay.witness["margin"] = replay.margin;
      replay.witness["scale"] = replay.scale;
      r.witness = std::move(replay.witness);
    }
    for (const auto& [name, s] : aux) {
      r.details[name] = Json{{"worst_relative_margin", number_to_json(s.worst)},
                             {"violations", s.violations}};
    }
  }

  if (cfg.timing) {
    r.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return r;
}

}  // namespace superquad
