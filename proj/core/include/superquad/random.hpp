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
#include <random>

#include "superquad/matrix.hpp"

namespace superquad {

/// Seeded generator identified by (seed, stream). Identical identifiers give
/// bit-identical sequences; fork() derives independent child streams so
/// that trial i of a suite does not depend on how trials are scheduled.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  /// Child generator for sub-task `index`; depends only on (seed, stream,
  /// fork path, index), not on how much of this generator was consumed.
  Rng fork(std::uint64_t index) const;

  std::uint64_t next_u64() { return engine_(); }
  double uniform(double a, double b);
  double normal();
  std::size_t below(std::size_t n);
  bool bernoulli(double p) { return uniform(0.0, 1.0) < p; }

  std::mt19937_64& engine() { return engine_; }

 private:
  struct Derived {};
  Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t key, Derived);

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t key_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Haar-distributed orthogonal matrix (QR of a Gaussian matrix with the
/// sign convention diag(R) > 0).
Matrix random_orthogonal(std::size_t n, Rng& rng);

/// Q diag(u_1..u_n) Q^T with u_i uniform on [a, b] and Q Haar; exactly a I
/// when a == b. Throws std::invalid_argument if a > b.
SymMatrix sample_with_spectrum(std::size_t n, double a, double b, Rng& rng);

/// Symmetric matrix with i.i.d. N(0, sigma^2) upper-triangle entries.
SymMatrix random_symmetric(std::size_t n, Rng& rng, double sigma = 1.0);

}  // namespace superquad
