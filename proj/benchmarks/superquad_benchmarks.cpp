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

#include <benchmark/benchmark.h>

#include "superquad/operator_inequalities.hpp"
#include "superquad/quadrature.hpp"
#include "superquad/random.hpp"
#include "superquad/sampler.hpp"
#include "superquad/spectral.hpp"

namespace {

using namespace superquad;

void BM_EigSym(benchmark::State& state) {
  Rng rng(1);
  const SymMatrix a = random_symmetric(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(eig_sym(a));
}
BENCHMARK(BM_EigSym)->Arg(2)->Arg(5)->Arg(16)->Arg(32);

void BM_ApplyFunction(benchmark::State& state) {
  Rng rng(2);
  const SymMatrix a = sample_with_spectrum(static_cast<std::size_t>(state.range(0)), 0.0, 3.0, rng);
  const FunctionSpec f = FunctionSpec::power(2.5);
  for (auto _ : state) benchmark::DoNotOptimize(apply_function(f, a));
}
BENCHMARK(BM_ApplyFunction)->Arg(2)->Arg(5)->Arg(16);

void BM_MercerOperatorCheck(benchmark::State& state) {
  Rng rng(3);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const MercerInstance inst = sample_mercer_instance(n, Interval(0.5, 2.5), maps::Identity{}, rng);
  const FunctionSpec f = FunctionSpec::power(3.0);
  for (auto _ : state) benchmark::DoNotOptimize(mercer_operator_check(f, inst));
}
BENCHMARK(BM_MercerOperatorCheck)->Arg(1)->Arg(3)->Arg(5);

void BM_SampleMercerInstance(benchmark::State& state) {
  Rng rng(4);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_mercer_instance(n, Interval(0.5, 2.5), maps::Identity{}, rng));
  }
}
BENCHMARK(BM_SampleMercerInstance)->Arg(2)->Arg(5);

void BM_Integrate(benchmark::State& state) {
  const FunctionSpec f = FunctionSpec::power(2.5);
  const std::function<double(double)> g = [&](double u) { return f(u); };
  for (auto _ : state) benchmark::DoNotOptimize(integrate(g, 0.0, 3.0));
}
BENCHMARK(BM_Integrate);

}  // namespace

BENCHMARK_MAIN();
