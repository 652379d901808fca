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

#include <gtest/gtest.h>

#include "superquad/search.hpp"

namespace superquad {
namespace {

const FunctionSpec kCube = FunctionSpec::power(3.0);
const FunctionSpec kSquare = FunctionSpec::power(2.0);

TEST(Search, TargetsListed) {
  EXPECT_EQ(search_targets().size(), 4u);
}

TEST(Search, UnknownTargetThrows) {
  Rng rng(1);
  EXPECT_THROW(search_counterexample("mercer-op", "bogus", kCube, 2, 10, rng),
               std::invalid_argument);
  EXPECT_THROW(search_counterexample("jensen-sq", "none", kCube, 2, 10, rng),
               std::invalid_argument);
}

TEST(Search, RelaxedMidpointFindsWitness) {
  Rng rng(0);
  const auto o = search_counterexample("midpoint-op", "sandwich", kCube, 2, 10000, rng);
  ASSERT_TRUE(o.found);
  ASSERT_TRUE(o.witness);
  EXPECT_LT(o.margin, -SearchOptions{}.threshold * o.scale);
  const double again = reevaluate_witness("midpoint-op", "sandwich", kCube, *o.witness);
  EXPECT_NEAR(again, o.margin, 1e-12 * o.scale);
  EXPECT_NO_THROW(o.witness->get("A"));
  EXPECT_THROW(o.witness->get("Z"), std::out_of_range);
}

TEST(Search, DroppingSumFindsWitness) {
  Rng rng(0);
  const auto o = search_counterexample("mercer-op", "sum", kSquare, 2, 10000, rng);
  ASSERT_TRUE(o.found);
  EXPECT_NEAR(reevaluate_witness("mercer-op", "sum", kSquare, *o.witness), o.margin,
              1e-12 * o.scale);
}

TEST(Search, EnforcedHypothesesExhaust) {
  Rng rng(0);
  const auto mid = search_counterexample("midpoint-op", "none", kCube, 2, 2000, rng);
  EXPECT_FALSE(mid.found);
  EXPECT_EQ(mid.evaluations, 2000);
  EXPECT_GE(mid.margin, -1e-8 * mid.scale);
  const auto mer = search_counterexample("mercer-op", "none", kCube, 2, 2000, rng);
  EXPECT_FALSE(mer.found);
}

TEST(Search, Deterministic) {
  Rng a(9, 1);
  Rng b(9, 1);
  const auto x = search_counterexample("mercer-op", "none", kCube, 2, 500, a);
  const auto y = search_counterexample("mercer-op", "none", kCube, 2, 500, b);
  EXPECT_EQ(x.margin, y.margin);
  EXPECT_EQ(x.evaluations, y.evaluations);
}

}  // namespace
}  // namespace superquad
