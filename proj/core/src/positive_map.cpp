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

#include "superquad/positive_map.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "superquad/errors.hpp"
#include "superquad/spectral.hpp"

namespace superquad {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

template <class Int>
Int parse_int(std::string_view s, std::string_view what) {
  Int v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("bad " + std::string(what) + " '" + std::string(s) + "' in map spec");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(':', start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

void require_order(const Matrix& u, const SymMatrix& x) {
  if (u.rows() != x.order()) throw std::invalid_argument("map order does not match matrix order");
}

}  // namespace

MapDescriptor MapDescriptor::parse(std::string_view text) {
  const auto parts = split(text);
  MapDescriptor d;
  const auto head = parts.front();
  if (head == "id" && parts.size() == 1) {
    d.kind = Kind::kIdentity;
  } else if (head == "trace" && parts.size() == 1) {
    d.kind = Kind::kTrace;
  } else if (head == "pinch" && parts.size() == 2) {
    d.kind = Kind::kPinch;
    d.blocks = parse_int<std::size_t>(parts[1], "block count");
    if (d.blocks == 0) throw ParseError("pinch needs at least one block");
  } else if (head == "conj" && parts.size() <= 2) {
    d.kind = Kind::kConj;
    if (parts.size() == 2) d.seed = parse_int<std::uint64_t>(parts[1], "seed");
  } else if (head == "mix" && (parts.size() == 2 || parts.size() == 3)) {
    d.kind = Kind::kMix;
    d.blocks = parse_int<std::size_t>(parts[1], "mixture size");
    if (d.blocks == 0) throw ParseError("mix needs at least one term");
    if (parts.size() == 3) d.seed = parse_int<std::uint64_t>(parts[2], "seed");
  } else {
    throw ParseError("unknown map spec '" + std::string(text) +
                     "' (expected id, trace, pinch:<k>, conj[:<seed>], mix:<k>[:<seed>])");
  }
  return d;
}

std::string MapDescriptor::to_string() const {
  const std::string seed_suffix = seed ? ":" + std::to_string(*seed) : "";
  switch (kind) {
    case Kind::kIdentity:
      return "id";
    case Kind::kTrace:
      return "trace";
    case Kind::kPinch:
      return "pinch:" + std::to_string(blocks);
    case Kind::kConj:
      return "conj" + seed_suffix;
    case Kind::kMix:
      return "mix:" + std::to_string(blocks) + seed_suffix;
  }
  throw std::logic_error("unknown map kind");
}

std::vector<MapDescriptor> default_map_family() {
  return {MapDescriptor::parse("id"), MapDescriptor::parse("trace"),
          MapDescriptor::parse("pinch:2"), MapDescriptor::parse("conj"),
          MapDescriptor::parse("mix:3")};
}

MapSpec make_pinching(std::size_t n, std::size_t blocks) {
  if (n == 0 || blocks == 0) throw std::invalid_argument("pinching needs n, k >= 1");
  blocks = std::min(blocks, n);
  maps::Pinching p;
  p.order = n;
  const std::size_t base = n / blocks;
  const std::size_t extra = n % blocks;
  std::size_t start = 0;
  for (std::size_t b = 0; b < blocks; ++b) {
    p.block_starts.push_back(start);
    start += base + (b < extra ? 1 : 0);
  }
  return p;
}

MapSpec make_mixture(std::size_t n, std::size_t terms, Rng& rng) {
  if (terms == 0) throw std::invalid_argument("mixture needs at least one term");
  maps::Mixture mix;
  double total = 0.0;
  for (std::size_t i = 0; i < terms; ++i) {
    const double w = rng.uniform(0.05, 1.0);
    mix.weights.push_back(w);
    total += w;
  }
  for (double& w : mix.weights) w /= total;
  for (std::size_t i = 0; i < terms; ++i) mix.unitaries.push_back(random_orthogonal(n, rng));
  return mix;
}

MapSpec instantiate_map(const MapDescriptor& d, std::size_t n, Rng& rng) {
  switch (d.kind) {
    case MapDescriptor::Kind::kIdentity:
      return maps::Identity{};
    case MapDescriptor::Kind::kTrace:
      return maps::NormalizedTrace{};
    case MapDescriptor::Kind::kPinch:
      return make_pinching(n, d.blocks);
    case MapDescriptor::Kind::kConj: {
      if (d.seed) {
        Rng own(*d.seed, 0);
        return maps::UnitaryConjugation{random_orthogonal(n, own)};
      }
      return maps::UnitaryConjugation{random_orthogonal(n, rng)};
    }
    case MapDescriptor::Kind::kMix: {
      if (d.seed) {
        Rng own(*d.seed, 0);
        return make_mixture(n, d.blocks, own);
      }
      return make_mixture(n, d.blocks, rng);
    }
  }
  throw std::logic_error("unknown map kind");
}

SymMatrix apply_map(const MapSpec& phi, const SymMatrix& x) {
  return std::visit(
      Overloaded{
          [&](const maps::Identity&) { return x; },
          [&](const maps::UnitaryConjugation& c) {
            require_order(c.u, x);
            return SymMatrix::congruence(c.u, x);
          },
          [&](const maps::Pinching& p) {
            if (p.order != x.order()) {
              throw std::invalid_argument("pinching order does not match matrix order");
            }
            Matrix out(p.order, p.order);
            for (std::size_t b = 0; b < p.block_starts.size(); ++b) {
              const std::size_t lo = p.block_starts[b];
              const std::size_t hi =
                  b + 1 < p.block_starts.size() ? p.block_starts[b + 1] : p.order;
              for (std::size_t i = lo; i < hi; ++i)
                for (std::size_t j = lo; j < hi; ++j) out(i, j) = x(i, j);
            }
            return SymMatrix(out);
          },
          [&](const maps::NormalizedTrace&) {
            return SymMatrix::scalar(x.order(), x.trace() / static_cast<double>(x.order()));
          },
          [&](const maps::Mixture& m) {
            SymMatrix acc = SymMatrix::scalar(x.order(), 0.0);
            for (std::size_t i = 0; i < m.weights.size(); ++i) {
              require_order(m.unitaries[i], x);
              acc = acc + m.weights[i] * SymMatrix::congruence(m.unitaries[i], x);
            }
            return acc;
          },
          [&](const maps::ScaledTrace& s) {
            return SymMatrix::scalar(x.order(), s.factor * x.trace());
          },
      },
      phi);
}

std::string describe(const MapSpec& phi) {
  return std::visit(
      Overloaded{
          [](const maps::Identity&) -> std::string { return "id"; },
          [](const maps::UnitaryConjugation& c) -> std::string {
            return "conj(n=" + std::to_string(c.u.rows()) + ")";
          },
          [](const maps::Pinching& p) -> std::string {
            return "pinch:" + std::to_string(p.block_starts.size());
          },
          [](const maps::NormalizedTrace&) -> std::string { return "trace"; },
          [](const maps::Mixture& m) -> std::string {
            return "mix:" + std::to_string(m.weights.size());
          },
          [](const maps::ScaledTrace& s) -> std::string {
            return "scaled-trace:" + std::to_string(s.factor);
          },
      },
      phi);
}

MapValidationReport validate_map(const MapSpec& phi, std::size_t n, int trials, Rng& rng) {
  if (trials < 1) throw std::invalid_argument("validate_map needs trials >= 1");
  MapValidationReport r;
  r.trials = trials;
  r.worst_positivity_margin = std::numeric_limits<double>::infinity();

  const SymMatrix eye = SymMatrix::identity(n);
  r.unitality_error = max_abs_diff(apply_map(phi, eye).matrix(), eye.matrix());

  for (int t = 0; t < trials; ++t) {
    const SymMatrix x = random_symmetric(n, rng);
    const SymMatrix y = random_symmetric(n, rng);
    const double a = rng.uniform(-2.0, 2.0);
    const double b = rng.uniform(-2.0, 2.0);
    const SymMatrix combined = apply_map(phi, a * x + b * y);
    const SymMatrix separate = a * apply_map(phi, x) + b * apply_map(phi, y);
    const double lin = max_abs_diff(combined.matrix(), separate.matrix());
    r.worst_linearity_error = std::max(r.worst_linearity_error, lin);
    if (lin > 1e-10) ++r.linearity_failures;

    const SymMatrix psd = sample_with_spectrum(n, 0.0, rng.uniform(0.1, 5.0), rng);
    const double pos = min_eigenvalue(apply_map(phi, psd));
    r.worst_positivity_margin = std::min(r.worst_positivity_margin, pos);
    if (pos < -1e-10) ++r.positivity_failures;

    if (r.unitality_error > 1e-12) ++r.unitality_failures;
  }
  return r;
}

}  // namespace superquad
