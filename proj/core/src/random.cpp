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

#include "superquad/random.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace superquad {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : Rng(seed, stream, mix64(seed) ^ mix64(~stream), Derived{}) {}

Rng::Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t key, Derived)
    : seed_(seed), stream_(stream), key_(key), engine_(key) {}

Rng Rng::fork(std::uint64_t index) const {
  return Rng(seed_, stream_, mix64(key_ ^ mix64(index + 0x632be59bd9b4e019ULL)), Derived{});
}

double Rng::uniform(double a, double b) {
  return std::uniform_real_distribution<double>(a, b)(engine_);
}

double Rng::normal() { return normal_(engine_); }

std::size_t Rng::below(std::size_t n) {
  if (n == 0) throw std::invalid_argument("below(0)");
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
}

Matrix random_orthogonal(std::size_t n, Rng& rng) {
  if (n == 0) throw std::invalid_argument("orthogonal matrix order must be >= 1");
  Matrix q(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q(i, j) = rng.normal();

  // Modified Gram-Schmidt, two passes per column.
  for (std::size_t j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += q(i, k) * q(i, j);
        for (std::size_t i = 0; i < n; ++i) q(i, j) -= dot * q(i, k);
      }
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm += q(i, j) * q(i, j);
    norm = std::sqrt(norm);
    if (norm == 0.0) return random_orthogonal(n, rng);  // measure-zero event
    for (std::size_t i = 0; i < n; ++i) q(i, j) /= norm;
  }
  return q;
}

SymMatrix sample_with_spectrum(std::size_t n, double a, double b, Rng& rng) {
  if (a > b) throw std::invalid_argument("sample_with_spectrum needs a <= b");
  if (a == b) return SymMatrix::scalar(n, a);
  std::vector<double> values(n);
  for (double& v : values) v = rng.uniform(a, b);
  if (n == 1) return SymMatrix::diagonal(values);
  return SymMatrix::from_spectrum(random_orthogonal(n, rng), values);
}

SymMatrix random_symmetric(std::size_t n, Rng& rng, double sigma) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const double v = sigma * rng.normal();
      m(i, j) = v;
      m(j, i) = v;
    }
  return SymMatrix(m);
}

}  // namespace superquad
