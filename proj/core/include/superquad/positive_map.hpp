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
#include <variant>
#include <vector>

#include "superquad/matrix.hpp"
#include "superquad/random.hpp"

namespace superquad {

namespace maps {

struct Identity {};

/// X -> U^T X U for orthogonal U.
struct UnitaryConjugation {
  Matrix u;
};

/// Keeps the diagonal blocks of a contiguous partition and zeroes the rest.
/// `block_starts` is ascending, begins with 0; the last block ends at `order`.
struct Pinching {
  std::size_t order = 0;
  std::vector<std::size_t> block_starts;
};

/// X -> (tr X / n) I.
struct NormalizedTrace {};

/// X -> sum_i w_i U_i^T X U_i with w_i >= 0 summing to 1.
struct Mixture {
  std::vector<double> weights;
  std::vector<Matrix> unitaries;
};

/// X -> c tr(X) I. Positive but not unital unless c = 1/n; exists only as a
/// negative control for validate_map.
struct ScaledTrace {
  double factor = 1.0;
};

}  // namespace maps

/// A concrete positive linear map on symmetric matrices.
using MapSpec = std::variant<maps::Identity, maps::UnitaryConjugation, maps::Pinching,
                             maps::NormalizedTrace, maps::Mixture, maps::ScaledTrace>;

/// Textual map family member:
///   `id`, `trace`, `pinch:<k>`, `conj[:<seed>]`, `mix:<k>[:<seed>]`.
/// Without a seed, conj/mix draw fresh unitaries from the caller's Rng.
struct MapDescriptor {
  enum class Kind { kIdentity, kTrace, kPinch, kConj, kMix };

  Kind kind = Kind::kIdentity;
  std::size_t blocks = 0;  // pinch / mix count
  std::optional<std::uint64_t> seed;

  /// Throws ParseError.
  static MapDescriptor parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const MapDescriptor&, const MapDescriptor&) = default;
};

/// The five-member family used when a suite is not pinned to one map:
/// id, trace, pinch:2, conj, mix:3.
std::vector<MapDescriptor> default_map_family();

/// Binds a descriptor to order n. Pinching with k > n blocks degrades to n
/// blocks. `rng` supplies unitaries when the descriptor carries no seed.
MapSpec instantiate_map(const MapDescriptor& d, std::size_t n, Rng& rng);

MapSpec make_pinching(std::size_t n, std::size_t blocks);
MapSpec make_mixture(std::size_t n, std::size_t terms, Rng& rng);

/// Throws std::invalid_argument on dimension mismatch.
SymMatrix apply_map(const MapSpec& phi, const SymMatrix& x);

std::string describe(const MapSpec& phi);

struct MapValidationReport {
  int trials = 0;
  int linearity_failures = 0;
  int positivity_failures = 0;
  int unitality_failures = 0;
  double worst_linearity_error = 0.0;
  double worst_positivity_margin = 0.0;  // min eig of phi(P) over trials
  double unitality_error = 0.0;

  bool passed() const {
    return linearity_failures == 0 && positivity_failures == 0 && unitality_failures == 0;
  }
};

/// Randomized check of linearity (1e-10), positivity on random PSD inputs
/// (min eig >= -1e-10) and unitality (phi(I) == I to 1e-12) at order n.
MapValidationReport validate_map(const MapSpec& phi, std::size_t n, int trials, Rng& rng);

}  // namespace superquad
