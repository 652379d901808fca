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
#include <limits>

#include <gtest/gtest.h>

#include "superquad/errors.hpp"
#include "superquad/function.hpp"

namespace superquad {
namespace {

TEST(FunctionSpec, ParsesAndRoundTrips) {
  for (const char* text : {"pow:2", "pow:2.5", "pow:3", "negpow:1.5", "negpow:0.5", "pow:0.1"}) {
    const FunctionSpec f = FunctionSpec::parse(text);
    EXPECT_EQ(f.to_string(), text);
    EXPECT_EQ(FunctionSpec::parse(f.to_string()), f);
  }
  EXPECT_EQ(FunctionSpec::parse("pow:3.0").to_string(), "pow:3");
}

TEST(FunctionSpec, RejectsMalformedText) {
  for (const char* text : {"", "pow", "pow:", "pow:x", "pow:2x", "cube:3", "pow:-1", "pow:0",
                           "negpow:inf", "pow:nan", " pow:2"}) {
    EXPECT_THROW(FunctionSpec::parse(text), ParseError) << text;
  }
}

TEST(FunctionSpec, ConstructorRejectsBadExponent) {
  EXPECT_THROW(FunctionSpec::power(0.0), DomainError);
  EXPECT_THROW(FunctionSpec::neg_power(-2.0), DomainError);
  EXPECT_THROW(FunctionSpec::power(std::numeric_limits<double>::infinity()), DomainError);
}

TEST(FunctionSpec, Evaluates) {
  EXPECT_DOUBLE_EQ(FunctionSpec::power(3.0)(2.0), 8.0);
  EXPECT_DOUBLE_EQ(FunctionSpec::neg_power(1.5)(4.0), -8.0);
  EXPECT_EQ(FunctionSpec::power(2.5)(0.0), 0.0);
  EXPECT_EQ(FunctionSpec::neg_power(2.0)(0.0), 0.0);
  EXPECT_THROW(FunctionSpec::power(2.0)(-1e-300), DomainError);
  EXPECT_THROW(FunctionSpec::power(2.0)(std::nan("")), DomainError);
}

TEST(FunctionSpec, ClassificationFlags) {
  EXPECT_TRUE(FunctionSpec::power(2.0).claimed_superquadratic());
  EXPECT_TRUE(FunctionSpec::power(4.0).claimed_superquadratic());
  EXPECT_FALSE(FunctionSpec::power(1.5).claimed_superquadratic());
  EXPECT_TRUE(FunctionSpec::neg_power(1.0).claimed_superquadratic());
  EXPECT_TRUE(FunctionSpec::neg_power(2.0).claimed_superquadratic());
  EXPECT_FALSE(FunctionSpec::neg_power(2.5).claimed_superquadratic());
  EXPECT_FALSE(FunctionSpec::neg_power(0.5).claimed_superquadratic());

  EXPECT_TRUE(FunctionSpec::power(1.0).is_convex());
  EXPECT_FALSE(FunctionSpec::power(0.5).is_convex());
  EXPECT_TRUE(FunctionSpec::neg_power(0.5).is_convex());
  EXPECT_FALSE(FunctionSpec::neg_power(1.5).is_convex());
}

TEST(Interval, Validates) {
  EXPECT_NO_THROW(Interval(0.0, 1e-9));
  EXPECT_THROW(Interval(1.0, 1.0), DomainError);
  EXPECT_THROW(Interval(-0.5, 1.0), DomainError);
  EXPECT_THROW(Interval(2.0, 1.0), DomainError);
  EXPECT_DOUBLE_EQ(Interval(1.0, 3.5).width(), 2.5);
}

TEST(Beta, WorkedValues) {
  const FunctionSpec cube = FunctionSpec::power(3.0);
  const Interval iv(0.0, 3.0);
  EXPECT_NEAR(beta_eval(cube, iv, 1.0), 10.0 / 3.0, 1e-14);
  EXPECT_NEAR(beta_eval(cube, iv, 3.0), 0.0, 1e-14);
  EXPECT_NEAR(beta_eval(cube, iv, 2.0), 10.0 / 3.0, 1e-14);
  // t^2 on [1, 2]: beta(t) = (t - 1)(2 - t)
  EXPECT_NEAR(beta_eval(FunctionSpec::power(2.0), Interval(1.0, 2.0), 1.5), 0.25, 1e-15);
}

TEST(Beta, VanishesAtEndpointsForCatalog) {
  const Interval iv(0.7, 2.9);
  for (const auto& f : {FunctionSpec::power(2.0), FunctionSpec::power(3.5),
                        FunctionSpec::neg_power(1.5)}) {
    EXPECT_EQ(beta_eval(f, iv, iv.lower), 0.0);
    EXPECT_EQ(beta_eval(f, iv, iv.upper), 0.0);
  }
}

TEST(Beta, SymmetricUnderReflection) {
  const Interval iv(0.5, 4.0);
  const FunctionSpec f = FunctionSpec::neg_power(1.25);
  for (double t = iv.lower; t <= iv.upper; t += 0.125) {
    EXPECT_NEAR(beta_eval(f, iv, t), beta_eval(f, iv, iv.lower + iv.upper - t), 1e-13);
  }
}

TEST(Beta, ClosedFormMatchesDefinition) {
  const Interval iv(0.25, 3.0);
  for (double p : {1.0, 1.5, 2.0, 3.0, 4.5}) {
    for (double x = iv.lower; x <= iv.upper; x += 0.1) {
      EXPECT_NEAR(beta_p_closed(p, iv, x), beta_eval(FunctionSpec::power(p), iv, x),
                  1e-12 * (1.0 + std::pow(iv.upper, p)));
    }
  }
  EXPECT_THROW(beta_p_closed(0.5, iv, 1.0), DomainError);
}

TEST(Beta, OutsideIntervalThrows) {
  EXPECT_THROW(beta_eval(FunctionSpec::power(2.0), Interval(1.0, 2.0), 0.999), DomainError);
  EXPECT_THROW(beta_eval(FunctionSpec::power(2.0), Interval(1.0, 2.0), 2.001), DomainError);
}

TEST(Certificate, RejectsBadArguments) {
  EXPECT_THROW(certify_superquadratic(FunctionSpec::power(2.0), 10.0, 2), std::invalid_argument);
  EXPECT_THROW(certify_superquadratic(FunctionSpec::power(2.0), 0.0, 50), std::invalid_argument);
}

TEST(Certificate, GridIncludesBothEnds) {
  const auto cert = certify_superquadratic(FunctionSpec::power(3.0), 10.0, 200);
  ASSERT_EQ(cert.grid.size(), 200u);
  EXPECT_EQ(cert.grid.front(), 0.0);
  EXPECT_EQ(cert.grid.back(), 10.0);
  EXPECT_EQ(cert.windows.size(), 200u);
}

TEST(Certificate, MatchesClaimedFlagOnCatalog) {
  for (double p : {1.0, 1.5, 2.0, 2.5, 3.0, 4.0}) {
    const FunctionSpec f = FunctionSpec::power(p);
    EXPECT_EQ(certify_superquadratic(f).holds, f.claimed_superquadratic()) << f.to_string();
  }
  for (double q : {1.0, 1.5, 2.0, 2.5}) {
    const FunctionSpec f = FunctionSpec::neg_power(q);
    EXPECT_EQ(certify_superquadratic(f).holds, f.claimed_superquadratic()) << f.to_string();
  }
}

// -sqrt(t) is superquadratic with C_x = 0: sqrt(x) + sqrt(|y - x|) >= sqrt(y).
TEST(Certificate, NegativeSquareRootHolds) {
  const auto cert = certify_superquadratic(FunctionSpec::neg_power(0.5));
  EXPECT_TRUE(cert.holds);
  const double x = cert.grid[50];
  for (double y : cert.grid) {
    EXPECT_GE(std::sqrt(x) + std::sqrt(std::abs(y - x)) - std::sqrt(y), -1e-15);
  }
}

TEST(Certificate, FailureCarriesWitness) {
  const auto cert = certify_superquadratic(FunctionSpec::power(1.5));
  ASSERT_FALSE(cert.holds);
  ASSERT_TRUE(cert.witness.has_value());
  EXPECT_GT(cert.witness->lower, cert.witness->upper);
  EXPECT_LT(cert.worst_width(), 0.0);
}

// For t^2 every window collapses onto the derivative 2x.
TEST(Certificate, SquareSlopeIsDerivative) {
  const auto cert = certify_superquadratic(FunctionSpec::power(2.0), 10.0, 101);
  ASSERT_TRUE(cert.holds);
  for (std::size_t i = 0; i < cert.grid.size(); ++i) {
    EXPECT_NEAR(cert.slope_constant(i), 2.0 * cert.grid[i], 1e-9);
  }
}

// The window at x must contain the tangent slope f'(x) for t^p, p >= 2.
TEST(Certificate, WindowsContainDerivative) {
  const double p = 3.0;
  const auto cert = certify_superquadratic(FunctionSpec::power(p), 10.0, 200);
  for (std::size_t i = 1; i + 1 < cert.grid.size(); ++i) {
    const double slope = p * std::pow(cert.grid[i], p - 1.0);
    EXPECT_LE(cert.windows[i].lower, slope + 1e-9 * (1.0 + slope));
    EXPECT_GE(cert.windows[i].upper, slope - 1e-9 * (1.0 + slope));
  }
}

}  // namespace
}  // namespace superquad
