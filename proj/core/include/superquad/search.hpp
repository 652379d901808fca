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
#include <utility>
#include <vector>

#include "superquad/function.hpp"
#include "superquad/matrix.hpp"
#include "superquad/random.hpp"

namespace superquad {

struct SearchOptions {
  int restarts_per_slice = 64;
  double initial_step = 0.5;
  double min_step = 1e-6;
  /// A witness must reach margin < -threshold * scale.
  double threshold = 1e-6;
};

/// Instance that realized a margin, in a form that can be re-evaluated.
struct SearchWitness {
  std::vector<std::pair<std::string, SymMatrix>> matrices;
  std::optional<Interval> iv;

  const SymMatrix& get(std::string_view name) const;
};

struct SearchOutcome {
  std::string claim;
  std::string relaxation;
  bool found = false;
  double margin = 0.0;  // of the witness if found, else best seen
  double scale = 1.0;
  long evaluations = 0;
  std::optional<SearchWitness> witness;  // witness, or best instance when exhausted
};

/// (claim, relaxation) pairs accepted by search_counterexample:
///   midpoint-op / sandwich  midpoint convexity of f with no spectral sandwich
///   midpoint-op / none      the sandwiched midpoint bound
///   mercer-op / sum         four-operator bound without A + D = B + C (identity map)
///   mercer-op / none        four-operator bound with every hypothesis (identity map)
std::vector<std::pair<std::string, std::string>> search_targets();

/// Random restarts plus coordinate-wise Gaussian descent on the relative
/// margin. Stops at the first witness or after `budget` margin evaluations.
/// Throws std::invalid_argument for an unknown (claim, relaxation).
SearchOutcome search_counterexample(std::string_view claim, std::string_view relaxation,
                                    const FunctionSpec& f, std::size_t n, long budget, Rng& rng,
                                    const SearchOptions& opts = {});

/// Margin recomputed from a stored witness with the same claim code path.
double reevaluate_witness(std::string_view claim, std::string_view relaxation,
                          const FunctionSpec& f, const SearchWitness& w);

}  // namespace superquad
