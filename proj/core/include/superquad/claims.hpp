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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "superquad/function.hpp"
#include "superquad/json_io.hpp"
#include "superquad/positive_map.hpp"

namespace superquad {

enum class ClaimKind { kScalar, kOperator };

struct ClaimInfo {
  std::string id;
  ClaimKind kind;
  bool takes_map;  // whether --map selects the positive map
  std::string summary;
};

/// Every claim accepted by run_suite, in listing order.
const std::vector<ClaimInfo>& claim_registry();
/// nullptr for an unknown id.
const ClaimInfo* find_claim(std::string_view id);

struct SuiteConfig {
  std::string claim;
  FunctionSpec fn = FunctionSpec::power(3.0);
  std::size_t dim = 2;
  /// Sampled instances; for sq-def the certification grid size.
  int trials = 100;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  /// Unset: trial i uses default_map_family()[i % 5].
  std::optional<MapDescriptor> map;
  /// Unset: 1e-9 for scalar claims, 1e-8 for operator claims.
  std::optional<double> tolerance;
  bool timing = true;
};

/// Aggregate of one suite run. A trial is a violation iff
/// margin < -tolerance * scale.
struct ClaimReport {
  std::string claim;
  std::string function;
  std::size_t dim = 0;
  std::string map;
  int trials = 0;
  int evaluated = 0;
  int violations = 0;
  int sampling_failures = 0;
  double worst_margin = 0.0;
  double worst_relative_margin = 0.0;
  double best_relative_margin = 0.0;
  double tolerance = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  /// Instance with the most negative relative margin among violations.
  std::optional<Json> witness;
  Json details = Json::object();
  std::optional<double> wall_time_ms;

  bool holds() const { return violations == 0; }
  Json to_json() const;
};

/// Trials draw from Rng(seed, stream).fork(i) and are independent of each
/// other. Throws std::invalid_argument for an unknown claim, a function the
/// claim does not cover, or a map on a claim without one.
ClaimReport run_suite(const SuiteConfig& config);

}  // namespace superquad
