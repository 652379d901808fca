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

#include "superquad/search.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <span>
#include <stdexcept>

#include "superquad/errors.hpp"
#include "superquad/operator_inequalities.hpp"
#include "superquad/positive_map.hpp"
#include "superquad/sampler.hpp"

namespace superquad {

namespace {

std::size_t tri_size(std::size_t n) { return n * (n + 1) / 2; }

void push_sym(std::vector<double>& theta, const SymMatrix& x) {
  for (std::size_t i = 0; i < x.order(); ++i)
    for (std::size_t j = i; j < x.order(); ++j) theta.push_back(x(i, j));
}

SymMatrix pop_sym(std::span<const double>& theta, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      m(i, j) = theta.front();
      m(j, i) = theta.front();
      theta = theta.subspan(1);
    }
  return SymMatrix(m);
}

// L L^T for the lower-triangular L read from theta; always PSD.
SymMatrix pop_gram(std::span<const double>& theta, std::size_t n) {
  Matrix l(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      l(i, j) = theta.front();
      theta = theta.subspan(1);
    }
  return SymMatrix(l * l.transpose());
}

struct Evaluation {
  double margin;
  double scale;
};

class Problem {
 public:
  explicit Problem(FunctionSpec f, std::size_t n) : f_(f), n_(n) {}
  virtual ~Problem() = default;

  virtual std::vector<double> random_start(Rng& rng) const = 0;
  /// Throws RejectedInstance / DomainError when theta is infeasible.
  virtual SearchWitness decode(std::span<const double> theta) const = 0;
  virtual Evaluation evaluate(const SearchWitness& w) const = 0;

 protected:
  FunctionSpec f_;
  std::size_t n_;
};

template <class R>
Evaluation from_result(const R& r) {
  return {r.margin, r.scale()};
}

class MidpointRelaxed : public Problem {
 public:
  using Problem::Problem;

  std::vector<double> random_start(Rng& rng) const override {
    std::vector<double> theta(2 * tri_size(n_));
    for (double& v : theta) v = rng.normal();
    return theta;
  }
  SearchWitness decode(std::span<const double> theta) const override {
    SearchWitness w;
    w.matrices.emplace_back("A", pop_gram(theta, n_));
    w.matrices.emplace_back("D", pop_gram(theta, n_));
    return w;
  }
  Evaluation evaluate(const SearchWitness& w) const override {
    return from_result(midpoint_convexity_check(f_, w.get("A"), w.get("D")));
  }
};

class MidpointSandwich : public Problem {
 public:
  using Problem::Problem;

  std::vector<double> random_start(Rng& rng) const override {
    const Interval iv = sample_interval(rng);
    auto [a, d] = sample_midpoint_instance(n_, iv, rng);
    std::vector<double> theta{iv.lower, iv.upper};
    push_sym(theta, a);
    push_sym(theta, d);
    return theta;
  }
  SearchWitness decode(std::span<const double> theta) const override {
    SearchWitness w;
    w.iv = Interval(theta[0], theta[1]);
    theta = theta.subspan(2);
    w.matrices.emplace_back("A", pop_sym(theta, n_));
    w.matrices.emplace_back("D", pop_sym(theta, n_));
    return w;
  }
  Evaluation evaluate(const SearchWitness& w) const override {
    return from_result(midpoint_jensen_check(f_, *w.iv, w.get("A"), w.get("D")));
  }
};

class MercerProblem : public Problem {
 public:
  MercerProblem(FunctionSpec f, std::size_t n, bool keep_sum)
      : Problem(f, n), keep_sum_(keep_sum) {}

  std::vector<double> random_start(Rng& rng) const override {
    const Interval iv = sample_interval(rng);
    const MercerInstance inst = sample_mercer_instance(n_, iv, maps::Identity{}, rng);
    std::vector<double> theta{iv.lower, iv.upper};
    push_sym(theta, inst.a);
    push_sym(theta, inst.b);
    push_sym(theta, inst.c);
    if (!keep_sum_) push_sym(theta, inst.d);
    return theta;
  }
  SearchWitness decode(std::span<const double> theta) const override {
    SearchWitness w;
    w.iv = Interval(theta[0], theta[1]);
    theta = theta.subspan(2);
    SymMatrix a = pop_sym(theta, n_);
    SymMatrix b = pop_sym(theta, n_);
    SymMatrix c = pop_sym(theta, n_);
    SymMatrix d = keep_sum_ ? b + c - a : pop_sym(theta, n_);
    w.matrices = {{"A", a}, {"B", b}, {"C", c}, {"D", d}};
    return w;
  }
  Evaluation evaluate(const SearchWitness& w) const override {
    MercerInstance inst{w.get("A"), w.get("B"), w.get("C"), w.get("D"), *w.iv, maps::Identity{}};
    inst.validate(keep_sum_);
    return from_result(evaluate_mercer_operator(f_, inst));
  }

 private:
  bool keep_sum_;
};

std::unique_ptr<Problem> make_problem(std::string_view claim, std::string_view relaxation,
                                      const FunctionSpec& f, std::size_t n) {
  if (n == 0) throw std::invalid_argument("search dimension must be >= 1");
  if (claim == "midpoint-op" && relaxation == "sandwich") {
    return std::make_unique<MidpointRelaxed>(f, n);
  }
  if (claim == "midpoint-op" && relaxation == "none") {
    return std::make_unique<MidpointSandwich>(f, n);
  }
  if (claim == "mercer-op" && relaxation == "sum") {
    return std::make_unique<MercerProblem>(f, n, false);
  }
  if (claim == "mercer-op" && relaxation == "none") {
    return std::make_unique<MercerProblem>(f, n, true);
  }
  throw std::invalid_argument("unsupported search target '" + std::string(claim) + "' with --relax " +
                              std::string(relaxation));
}

struct Scored {
  std::vector<double> theta;
  SearchWitness witness;
  Evaluation eval;
  double objective() const { return eval.margin / eval.scale; }
};

}  // namespace

const SymMatrix& SearchWitness::get(std::string_view name) const {
  for (const auto& [key, m] : matrices)
    if (key == name) return m;
  throw std::out_of_range("witness has no matrix '" + std::string(name) + "'");
}

std::vector<std::pair<std::string, std::string>> search_targets() {
  return {{"midpoint-op", "sandwich"},
          {"midpoint-op", "none"},
          {"mercer-op", "sum"},
          {"mercer-op", "none"}};
}

double reevaluate_witness(std::string_view claim, std::string_view relaxation,
                          const FunctionSpec& f, const SearchWitness& w) {
  return make_problem(claim, relaxation, f, w.matrices.front().second.order())->evaluate(w).margin;
}

SearchOutcome search_counterexample(std::string_view claim, std::string_view relaxation,
                                    const FunctionSpec& f, std::size_t n, long budget, Rng& rng,
                                    const SearchOptions& opts) {
  const auto problem = make_problem(claim, relaxation, f, n);
  SearchOutcome out;
  out.claim = std::string(claim);
  out.relaxation = std::string(relaxation);
  out.margin = std::numeric_limits<double>::infinity();

  auto score = [&](std::vector<double> theta) -> std::optional<Scored> {
    ++out.evaluations;
    try {
      SearchWitness w = problem->decode(theta);
      const Evaluation e = problem->evaluate(w);
      if (!std::isfinite(e.margin)) return std::nullopt;
      return Scored{std::move(theta), std::move(w), e};
    } catch (const RejectedInstance&) {
    } catch (const DomainError&) {
    } catch (const std::invalid_argument&) {
    } catch (const NumericError&) {
    }
    return std::nullopt;
  };

  std::optional<Scored> overall;
  auto record = [&](const Scored& s) {
    if (!overall || s.objective() < overall->objective()) overall = s;
    return s.eval.margin < -opts.threshold * s.eval.scale;
  };
  auto finish = [&](bool found) {
    out.found = found;
    if (overall) {
      out.margin = overall->eval.margin;
      out.scale = overall->eval.scale;
      out.witness = overall->witness;
    }
    return out;
  };

  while (out.evaluations < budget) {
    std::optional<Scored> best;
    for (int r = 0; r < opts.restarts_per_slice && out.evaluations < budget; ++r) {
      std::vector<double> start;
      try {
        start = problem->random_start(rng);
      } catch (const SamplingFailure&) {
        ++out.evaluations;
        continue;
      }
      if (auto s = score(std::move(start))) {
        if (record(*s)) return finish(true);
        if (!best || s->objective() < best->objective()) best = std::move(s);
      }
    }
    if (!best) continue;

    double step = opts.initial_step;
    while (step >= opts.min_step && out.evaluations < budget) {
      bool improved = false;
      for (std::size_t i = 0; i < best->theta.size() && out.evaluations < budget; ++i) {
        std::vector<double> trial = best->theta;
        trial[i] += step * rng.normal();
        if (auto s = score(std::move(trial))) {
          if (record(*s)) return finish(true);
          if (s->objective() < best->objective()) {
            best = std::move(s);
            improved = true;
          }
        }
      }
      if (!improved) step *= 0.5;
    }
  }
  return finish(false);
}

}  // namespace superquad
