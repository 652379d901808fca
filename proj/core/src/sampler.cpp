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

#include "superquad/sampler.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "superquad/errors.hpp"
#include "superquad/spectral.hpp"

namespace superquad {

namespace {

struct Quadruple {
  double a, b, c, d;
};

// One eigenvalue slot of a commuting instance: a <= m <= b <= c <= M <= d
// with a + d = b + c.
std::optional<Quadruple> draw_commuting_slot(const Interval& iv, Rng& rng, int& tries) {
  const double m = iv.lower;
  const double big = iv.upper;
  while (tries-- > 0) {
    double b = rng.uniform(m, big);
    double c = rng.uniform(m, big);
    if (b > c) std::swap(b, c);
    const double a = rng.uniform(std::max(0.0, b + c - 2.0 * big), m);
    const double d = b + c - a;
    if (d >= big) return Quadruple{a, b, c, d};
  }
  return std::nullopt;
}

MercerInstance build_commuting(std::size_t n, const Interval& iv, const MapSpec& phi, Rng& rng,
                               int& tries) {
  std::vector<double> a(n), b(n), c(n), d(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto slot = draw_commuting_slot(iv, rng, tries);
    if (!slot) throw SamplingFailure("commuting Mercer sampler exhausted its tries");
    a[i] = slot->a;
    b[i] = slot->b;
    c[i] = slot->c;
    d[i] = slot->d;
  }
  if (n == 1) {
    return {SymMatrix::diagonal(a), SymMatrix::diagonal(b), SymMatrix::diagonal(c),
            SymMatrix::diagonal(d), iv, phi};
  }
  const Matrix q = random_orthogonal(n, rng);
  return {SymMatrix::from_spectrum(q, a), SymMatrix::from_spectrum(q, b),
          SymMatrix::from_spectrum(q, c), SymMatrix::from_spectrum(q, d), iv, phi};
}

std::optional<MercerInstance> try_noncommuting(std::size_t n, const Interval& iv,
                                               const MapSpec& phi, Rng& rng) {
  const double m = iv.lower;
  const double big = iv.upper;
  const SymMatrix a = sample_with_spectrum(n, 0.0, m, rng);
  const SymMatrix d = sample_with_spectrum(n, big, 2.0 * big, rng);
  const SymMatrix e = sample_with_spectrum(n, 0.0, 0.25 * (big - m), rng);
  const SymMatrix half = 0.5 * (a + d);
  const SymMatrix b = half - e;
  const SymMatrix c = half + e;
  if (min_eigenvalue(b) < m || max_eigenvalue(c) > big) return std::nullopt;
  return MercerInstance{a, b, c, d, iv, phi};
}

}  // namespace

Interval sample_interval(Rng& rng) {
  const double m = rng.uniform(0.0, 1.0);
  return Interval(m, m + rng.uniform(1.0, 3.0));
}

MercerInstance sample_mercer_instance(std::size_t n, const Interval& iv, const MapSpec& phi,
                                      Rng& rng, int max_tries, std::optional<SamplingMode> mode) {
  if (n == 0) throw std::invalid_argument("instance order must be >= 1");
  if (max_tries < 1) throw std::invalid_argument("max_tries must be >= 1");
  const SamplingMode chosen =
      mode.value_or(rng.bernoulli(0.5) ? SamplingMode::kCommuting : SamplingMode::kNoncommuting);

  int tries = max_tries;
  if (chosen == SamplingMode::kCommuting) {
    MercerInstance inst = build_commuting(n, iv, phi, rng, tries);
    inst.validate();
    return inst;
  }
  while (tries-- > 0) {
    if (auto inst = try_noncommuting(n, iv, phi, rng)) {
      try {
        inst->validate();
        return *inst;
      } catch (const RejectedInstance&) {
        // rounding pushed it over a boundary; draw again
      }
    }
  }
  throw SamplingFailure("noncommuting Mercer sampler exhausted " + std::to_string(max_tries) +
                        " tries");
}

std::pair<SymMatrix, SymMatrix> sample_subadd_instance(std::size_t n, double big_m, Rng& rng,
                                                       int max_tries) {
  if (!(big_m > 0.0)) throw std::invalid_argument("M must be positive");
  for (int t = 0; t < max_tries; ++t) {
    SymMatrix b = SymMatrix::scalar(n, 0.0);
    SymMatrix c = b;
    if (rng.bernoulli(0.5)) {
      // lower spectral bounds that add up to M make M <= B + C automatic
      const double floor_b = rng.uniform(0.05, 0.95) * big_m;
      b = sample_with_spectrum(n, floor_b, big_m, rng);
      c = sample_with_spectrum(n, big_m - floor_b, big_m, rng);
    } else {
      b = sample_with_spectrum(n, 0.0, big_m, rng);
      c = sample_with_spectrum(n, 0.0, big_m, rng);
    }
    if (min_eigenvalue(b + c) < big_m - 1e-12) continue;
    try {
      validate_subadd_instance(big_m, b, c);
      return {b, c};
    } catch (const RejectedInstance&) {
    }
  }
  throw SamplingFailure("sub-additivity sampler exhausted its tries");
}

std::pair<SymMatrix, SymMatrix> sample_midpoint_instance(std::size_t n, const Interval& iv,
                                                         Rng& rng, int max_tries) {
  const double m = iv.lower;
  const double big = iv.upper;
  int tries = max_tries;
  while (tries > 0) {
    SymMatrix a = SymMatrix::scalar(n, 0.0);
    SymMatrix d = a;
    if (rng.bernoulli(0.5)) {
      std::vector<double> av(n), dv(n);
      for (std::size_t i = 0; i < n; ++i) {
        bool ok = false;
        while (tries-- > 0) {
          av[i] = rng.uniform(0.0, m);
          dv[i] = rng.uniform(big, 2.0 * big);
          const double mid = 0.5 * (av[i] + dv[i]);
          if (mid >= m && mid <= big) {
            ok = true;
            break;
          }
        }
        if (!ok) throw SamplingFailure("midpoint sampler exhausted its tries");
      }
      if (n == 1) {
        a = SymMatrix::diagonal(av);
        d = SymMatrix::diagonal(dv);
      } else {
        const Matrix q = random_orthogonal(n, rng);
        a = SymMatrix::from_spectrum(q, av);
        d = SymMatrix::from_spectrum(q, dv);
      }
    } else {
      --tries;
      a = sample_with_spectrum(n, 0.0, m, rng);
      d = sample_with_spectrum(n, big, 2.0 * big, rng);
    }
    try {
      validate_midpoint_sandwich(iv, a, d);
      return {a, d};
    } catch (const RejectedInstance&) {
    }
  }
  throw SamplingFailure("midpoint sampler exhausted its tries");
}

}  // namespace superquad
