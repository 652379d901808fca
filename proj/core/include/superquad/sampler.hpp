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
#include <optional>
#include <utility>

#include "superquad/function.hpp"
#include "superquad/matrix.hpp"
#include "superquad/operator_inequalities.hpp"
#include "superquad/positive_map.hpp"
#include "superquad/random.hpp"

namespace superquad {

inline constexpr int kDefaultMaxTries = 10000;

enum class SamplingMode {
  kCommuting,     // all four operators diagonal in one random basis
  kNoncommuting,  // A, D, and the split of A + D drawn in independent bases
};

/// Random [m, M] with m in [0, 1] and M - m in [1, 3].
Interval sample_interval(Rng& rng);

/// Valid quadruple for the four-operator Mercer bound. Without `mode` the
/// mode is a fair coin flip. Every returned instance has passed
/// MercerInstance::validate(). Throws SamplingFailure after max_tries.
MercerInstance sample_mercer_instance(std::size_t n, const Interval& iv, const MapSpec& phi,
                                      Rng& rng, int max_tries = kDefaultMaxTries,
                                      std::optional<SamplingMode> mode = std::nullopt);

/// (B, C) with 0 <= B, C <= MI <= B + C. Throws SamplingFailure.
std::pair<SymMatrix, SymMatrix> sample_subadd_instance(std::size_t n, double big_m, Rng& rng,
                                                       int max_tries = kDefaultMaxTries);

/// (A, D) with 0 <= A <= mI <= (A+D)/2 <= MI <= D. Throws SamplingFailure.
std::pair<SymMatrix, SymMatrix> sample_midpoint_instance(std::size_t n, const Interval& iv,
                                                         Rng& rng,
                                                         int max_tries = kDefaultMaxTries);

}  // namespace superquad
