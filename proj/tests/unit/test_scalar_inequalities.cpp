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

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "superquad/errors.hpp"
#include "superquad/random.hpp"
#include "superquad/scalar_inequalities.hpp"

namespace superquad {
namespace {

const FunctionSpec kSquare = FunctionSpec::power(2.0);
const FunctionSpec kCube = FunctionSpec::power(3.0);

std::vector<FunctionSpec> superquadratic_catalog() {
  return {FunctionSpec::power(2.0),      FunctionSpec::power(2.5),
          FunctionSpec::power(3.0),      FunctionSpec::power(4.0),
          FunctionSpec::neg_power(1.0),  FunctionSpec::neg_power(1.5),
          FunctionSpec::neg_power(2.0)};
}

TEST(WeightedSample, Validates) {
  EXPECT_NO_THROW(WeightedSample({1.0, 2.0}, {0.25, 0.75}));
  EXPECT_THROW(WeightedSample({}, {}), DomainError);
  EXPECT_THROW(WeightedSample({1.0}, {0.5, 0.5}), DomainError);
  EXPECT_THROW(WeightedSample({1.0, 2.0}, {0.6, 0.6}), DomainError);
  EXPECT_THROW(WeightedSample({1.0, 2.0}, {1.5, -0.5}), DomainError);
  EXPECT_DOUBLE_EQ(WeightedSample({1.0, 2.0}, {0.25, 0.75}).mean(), 1.75);
}

TEST(Chain, MarginsFollowDirection) {
  const auto up = make_chain({1.0, 2.0, 4.0}, ChainDirection::kAscending);
  EXPECT_EQ(up.margins, (std::vector<double>{1.0, 2.0}));
  EXPECT_TRUE(up.holds());
  const auto down = make_chain({1.0, 2.0, 4.0}, ChainDirection::kDescending);
  EXPECT_DOUBLE_EQ(down.worst_margin(), -2.0);
  EXPECT_FALSE(down.holds());
  const auto eq = make_chain({3.0, 3.0, 3.0 + 1e-12}, ChainDirection::kEqual);
  EXPECT_TRUE(eq.holds());
  EXPECT_DOUBLE_EQ(eq.scale(), 1.0 + 3.0 + 1e-12);
  EXPECT_EQ(make_chain({2.0, 1.0}, ChainDirection::kEqual).worst_margin(), -1.0);
}

TEST(JensenSq, WorkedValues) {
  EXPECT_NEAR(jensen_sq_gap(kCube, 0.0, 1.0, 0.5), 0.25, 1e-15);
  EXPECT_EQ(jensen_sq_gap(kCube, 3.0, 7.0, 0.0), 0.0);
  EXPECT_THROW(jensen_sq_gap(kCube, -1.0, 1.0, 0.5), DomainError);
  EXPECT_THROW(jensen_sq_gap(kCube, 1.0, 1.0, 1.5), DomainError);
}

TEST(JensenSq, IdentityForSquare) {
  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    const double x = rng.uniform(0.0, 10.0);
    const double y = rng.uniform(0.0, 10.0);
    const double l = rng.uniform(0.0, 1.0);
    EXPECT_NEAR(jensen_sq_gap(kSquare, x, y, l), 0.0, 1e-12 * (1.0 + x * x + y * y));
  }
}

TEST(MercerScalar, WorkedValues) {
  const Interval iv(0.0, 2.0);
  EXPECT_NEAR(mercer_scalar_gap(kSquare, iv, WeightedSample({0.5, 1.5}, {0.5, 0.5})), 1.75,
              1e-15);
  EXPECT_EQ(mercer_scalar_gap(kCube, Interval(1.0, 3.0), WeightedSample({1.0}, {1.0})), 0.0);
  EXPECT_EQ(mercer_scalar_gap(kCube, Interval(1.0, 3.0), WeightedSample({3.0}, {1.0})), 0.0);
  EXPECT_THROW(mercer_scalar_gap(kSquare, iv, WeightedSample({2.5}, {1.0})), DomainError);
  EXPECT_THROW(mercer_scalar_gap(FunctionSpec::neg_power(1.5), iv, WeightedSample({1.0}, {1.0})),
               DomainError);
}

TEST(LemmaNabla, WorkedValues) {
  const Interval iv(0.0, 2.0);
  EXPECT_NEAR(lemma_nabla_gap(kSquare, iv, 1.0, 0.3, 1.0), 0.0, 1e-14);
  EXPECT_NEAR(lemma_nabla_gap(kCube, iv, 1.0, 0.3, 1.0), 4.0, 1e-14);
  EXPECT_THROW(lemma_nabla_gap(kCube, iv, 2.5, 1.0, 0.5), DomainError);
}

// Coincident points: the |x - y| terms vanish and the bound is the
// one-point Lemma f(m+M-x) + 2 beta(x) <= f(m) + f(M) - f(x).
TEST(LemmaNabla, CoincidentPoints) {
  const Interval iv(0.5, 2.5);
  for (const auto& f : superquadratic_catalog()) {
    const double x = 1.7;
    const double expect = f(iv.lower) + f(iv.upper) - f(x) - f(iv.lower + iv.upper - x) -
                          2.0 * beta_eval(f, iv, x);
    EXPECT_NEAR(lemma_nabla_gap(f, iv, x, x, 0.5), expect, 1e-12) << f.to_string();
  }
}

TEST(HhMercerChain1, SquareExampleIsThirteenTwelfths) {
  const auto c = hh_mercer_chain_1(kSquare, Interval(0.0, 2.0), 0.5, 1.5);
  for (double t : c.terms) EXPECT_NEAR(t, 13.0 / 12.0, 1e-10);
}

TEST(HhMercerChain1, CubeAscendsStrictly) {
  const auto c = hh_mercer_chain_1(kCube, Interval(0.0, 2.0), 0.5, 1.5);
  EXPECT_TRUE(c.holds());
  EXPECT_GT(c.margins[0], 0.0);
  EXPECT_GT(c.margins[1], 0.0);
}

TEST(HhMercerChain1, OrderOfEndpointsIrrelevant) {
  const Interval iv(0.2, 3.0);
  const auto a = hh_mercer_chain_1(kCube, iv, 0.7, 2.9);
  const auto b = hh_mercer_chain_1(kCube, iv, 2.9, 0.7);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(a.terms[i], b.terms[i], 1e-12);
}

TEST(HhMercerChain1, DegenerateThrows) {
  EXPECT_THROW(hh_mercer_chain_1(kCube, Interval(0.0, 2.0), 1.0, 1.0), DegenerateInstance);
  EXPECT_THROW(hh_mercer_chain_2(kCube, Interval(0.0, 2.0), 1.0, 1.0), DegenerateInstance);
  EXPECT_THROW(hh_mercer_chain_1(kCube, Interval(0.0, 2.0), 1.0, 2.5), DomainError);
}

// For t^p the integrals have closed forms, which are exactly the terms of
// power_chain.
TEST(HhMercerChain1, MatchesPowerClosedForms) {
  Rng rng(5);
  for (double p : {1.0, 1.5, 2.0, 2.5, 3.0, 4.0}) {
    for (int i = 0; i < 50; ++i) {
      const double m = rng.uniform(0.0, 4.0);
      const Interval iv(m, m + rng.uniform(0.5, 4.0));
      const double x = rng.uniform(iv.lower, iv.upper);
      const double y = rng.uniform(iv.lower, iv.upper);
      const auto quad = hh_mercer_chain_1(FunctionSpec::power(p), iv, x, y);
      const auto closed = power_chain(p, iv, x, y);
      for (int k = 0; k < 3; ++k) {
        EXPECT_NEAR(quad.terms[k], closed.terms[k], 1e-9 * closed.scale()) << p << " term " << k;
      }
    }
  }
}

TEST(HhMercerChain2, WorkedInstancesHold) {
  EXPECT_TRUE(hh_mercer_chain_2(kSquare, Interval(0.0, 2.0), 0.5, 1.5).holds());
  EXPECT_TRUE(hh_mercer_chain_2(kCube, Interval(0.0, 2.0), 0.5, 1.5).holds());
}

// Oracle for the middle term with f = t^p: closed integrals of f and beta.
TEST(HhMercerChain2, MiddleMatchesClosedForm) {
  const double p = 3.0;
  const Interval iv(0.5, 2.5);
  const double x = 0.8;
  const double y = 2.1;
  const double m = iv.lower;
  const double big = iv.upper;
  const double w = big - m;
  const double mean_f = (std::pow(y, p + 1) - std::pow(x, p + 1)) / ((p + 1) * (y - x));
  // int (u - m)(M - u)^p du with s = M - u, and symmetrically with s = u - m
  auto prim = [&](double s) { return w * std::pow(s, p + 1) / (p + 1) - std::pow(s, p + 2) / (p + 2); };
  const double int_beta =
      ((prim(big - x) - prim(big - y)) + (prim(y - m) - prim(x - m))) / w;
  const double middle = std::pow(m, p) + std::pow(big, p) - (mean_f + 2.0 * int_beta / (y - x));
  EXPECT_NEAR(hh_mercer_chain_2(FunctionSpec::power(p), iv, x, y).terms[1], middle, 1e-10);
}

TEST(HhSqChain, SquareIsOneThird) {
  const auto c = hh_sq_chain(kSquare, 0.0, 1.0);
  for (double t : c.terms) EXPECT_NEAR(t, 1.0 / 3.0, 1e-12);
}

TEST(HhSqChain, Examples) {
  const auto cube = hh_sq_chain(kCube, 0.0, 1.0);
  EXPECT_GT(cube.margins[0], 0.0);
  EXPECT_GT(cube.margins[1], 0.0);
  EXPECT_TRUE(hh_sq_chain(FunctionSpec::neg_power(1.5), 1.0, 2.0).holds());
  EXPECT_THROW(hh_sq_chain(kCube, 1.0, 1.0), DegenerateInstance);
  EXPECT_THROW(hh_sq_chain(kCube, 2.0, 1.0), DegenerateInstance);
}

TEST(HhSqChain, SpecializesChain1) {
  Rng rng(8);
  for (const auto& f : superquadratic_catalog()) {
    for (int i = 0; i < 20; ++i) {
      const double x = rng.uniform(0.0, 5.0);
      const double y = x + rng.uniform(0.1, 5.0);
      const auto sq = hh_sq_chain(f, x, y);
      const auto c1 = hh_mercer_chain_1(f, Interval(x, y), x, y);
      for (int k = 0; k < 3; ++k) EXPECT_NEAR(sq.terms[k], c1.terms[k], 1e-9 * sq.scale());
    }
  }
}

TEST(PowerChain, Directions) {
  const Interval iv(0.0, 2.0);
  const auto sq = power_chain(2.0, iv, 0.5, 1.5);
  EXPECT_EQ(sq.direction, ChainDirection::kEqual);
  for (double t : sq.terms) EXPECT_NEAR(t, 13.0 / 12.0, 1e-14);
  const auto cube = power_chain(3.0, iv, 0.5, 1.5);
  EXPECT_EQ(cube.direction, ChainDirection::kAscending);
  EXPECT_TRUE(cube.holds());
  const auto low = power_chain(1.5, iv, 0.5, 1.5);
  EXPECT_EQ(low.direction, ChainDirection::kDescending);
  EXPECT_TRUE(low.holds());
  EXPECT_THROW(power_chain(0.5, iv, 0.5, 1.5), DomainError);
  EXPECT_THROW(power_chain(2.0, iv, 1.0, 1.0), DegenerateInstance);
}

TEST(Superadditive, WorkedValues) {
  EXPECT_NEAR(superadditive_gap(kSquare, 1.0, 1.0), 0.0, 1e-15);
  EXPECT_NEAR(superadditive_gap(kCube, 1.0, 1.0), 4.0, 1e-15);
  EXPECT_NEAR(superadditive_gap(kCube, 0.0, 2.5), 0.0, 1e-15);
  EXPECT_THROW(superadditive_gap(kCube, 0.0, 0.0), DegenerateInstance);
  EXPECT_THROW(superadditive_gap(kCube, -1.0, 2.0), DomainError);
}

TEST(FourPoint, WorkedValues) {
  EXPECT_NEAR(four_point_gap(kSquare, 0.0, 1.0, 1.0, 2.0), 0.0, 1e-15);
  EXPECT_NEAR(four_point_gap(kCube, 0.0, 1.0, 1.0, 2.0), 4.0, 1e-15);
  EXPECT_NEAR(four_point_gap(kCube, 0.5, 0.5, 3.0, 3.0), 0.0, 1e-13);
  EXPECT_THROW(four_point_gap(kCube, 1.0, 0.5, 2.5, 2.0), DomainError);
  EXPECT_THROW(four_point_gap(kCube, 0.0, 1.0, 1.5, 2.0), DomainError);
  EXPECT_THROW(four_point_gap(kCube, 1.0, 1.0, 1.0, 1.0), DegenerateInstance);
}

// Every gap and chain is nonnegative on random admissible inputs for every
// superquadratic catalog member.
TEST(ScalarProperties, CatalogSweep) {
  for (const auto& f : superquadratic_catalog()) {
    Rng rng(1234, static_cast<std::uint64_t>(f.exponent() * 8) + (f.kind() == FunctionSpec::Kind::kPower ? 0 : 100));
    for (int i = 0; i < 1000; ++i) {
      const double m = rng.uniform(0.0, 5.0);
      const Interval iv(m, m + rng.uniform(0.1, 5.0));
      const double x = rng.uniform(iv.lower, iv.upper);
      double y = rng.uniform(iv.lower, iv.upper);
      const double l = rng.uniform(0.0, 1.0);
      const double scale = 1.0 + std::abs(f(iv.upper)) + std::abs(f(iv.lower));
      ASSERT_GE(jensen_sq_gap(f, x, y, l), -1e-9 * scale) << f.to_string();
      ASSERT_GE(lemma_nabla_gap(f, iv, x, y, l), -1e-9 * scale) << f.to_string();
      ASSERT_GE(superadditive_gap(f, x, y), -1e-9 * (1.0 + std::abs(f(x + y))));
      const double y1 = std::min(x, y);
      const double y2 = std::max(x, y);
      if (y1 < y2) {
        const double x1 = rng.uniform(y1, 0.5 * (y1 + y2));
        const double x2 = std::max(x1, y1 + y2 - x1);
        ASSERT_GE(four_point_gap(f, y1, x1, x2, y2), -1e-9 * scale) << f.to_string();
        ASSERT_TRUE(hh_mercer_chain_1(f, iv, x, y).holds()) << f.to_string();
        ASSERT_TRUE(hh_mercer_chain_2(f, iv, x, y).holds()) << f.to_string();
        ASSERT_TRUE(hh_sq_chain(f, y1, y2).holds()) << f.to_string();
      }
    }
  }
}

TEST(ScalarProperties, SquareIdentityRandom) {
  Rng rng(99);
  for (int i = 0; i < 1000; ++i) {
    const double m = rng.uniform(0.0, 9.0);
    const Interval iv(m, rng.uniform(m + 0.01, 10.0));
    const double x = rng.uniform(iv.lower, iv.upper);
    const double y = rng.uniform(iv.lower, iv.upper);
    if (x == y) continue;
    const auto c = power_chain(2.0, iv, x, y);
    ASSERT_TRUE(c.holds());
    const double mid = c.terms[1];
    EXPECT_NEAR(c.terms[0], mid, 1e-9 * c.scale());
    EXPECT_NEAR(c.terms[2], mid, 1e-9 * c.scale());
  }
}

}  // namespace
}  // namespace superquad
