// Copyright 2026 The cauchykl Authors
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

#include <gtest/gtest.h>

#include <cmath>

#include "cauchykl/errors.hpp"
#include "cauchykl/jet.hpp"
#include "cauchykl/random.hpp"
#include "cauchykl/rational.hpp"

namespace cauchykl {
namespace {

using RJet = Jet<Rational, 5>;
using DJet = Jet<double, 5>;

Rational q(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

TEST(Jet, GeometricSeries) {
  const RJet h = RJet::variable(0);
  const RJet r = RJet(q(1)) / (RJet(q(1)) - h);
  for (std::size_t k = 0; k <= 5; ++k) EXPECT_EQ(r[k], q(1));
}

TEST(Jet, CubeAndDerivatives) {
  const RJet x = RJet::variable(2);
  const RJet cube = x * x * x;
  EXPECT_EQ(cube[0], q(8));
  EXPECT_EQ(cube[1], q(12));
  EXPECT_EQ(cube[2], q(6));
  EXPECT_EQ(cube[3], q(1));
  EXPECT_EQ(cube[4], q(0));
  EXPECT_EQ(cube.derivative(1), q(12));
  EXPECT_EQ(cube.derivative(2), q(12));
  EXPECT_EQ(cube.derivative(3), q(6));
}

TEST(Jet, RationalSqrtBinomialSeries) {
  const RJet one_plus_h = RJet(q(1)) + RJet::variable(0);
  const RJet r = sqrt(one_plus_h, q(1));
  EXPECT_EQ(r[0], q(1));
  EXPECT_EQ(r[1], q(1, 2));
  EXPECT_EQ(r[2], q(-1, 8));
  EXPECT_EQ(r[3], q(1, 16));
  EXPECT_EQ(r[4], q(-5, 128));
  EXPECT_EQ(r[5], q(7, 256));
  EXPECT_EQ(r * r, one_plus_h);
}

TEST(Jet, FloatingLogAndAtan) {
  const DJet h = DJet::variable(0.0);
  const DJet l = log(DJet(1.0) + h);
  const double log_series[] = {0.0, 1.0, -0.5, 1.0 / 3, -0.25, 0.2};
  for (std::size_t k = 0; k <= 5; ++k) EXPECT_NEAR(l[k], log_series[k], 1e-15);
  const DJet a = atan(h);
  const double atan_series[] = {0.0, 1.0, 0.0, -1.0 / 3, 0.0, 0.2};
  for (std::size_t k = 0; k <= 5; ++k) EXPECT_NEAR(a[k], atan_series[k], 1e-15);
}

TEST(Jet, FloatingMatchesFiniteDifferences) {
  // f(x) = atan(x) log(1 + x^2) / sqrt(x) at x = 1.3.
  auto f = [](double x) { return std::atan(x) * std::log(1 + x * x) / std::sqrt(x); };
  using J = Jet<double, 2>;
  const J x = J::variable(1.3);
  const J jf = atan(x) * log(J(1.0) + x * x) / sqrt(x);
  const double h = 1e-4;
  EXPECT_NEAR(jf.derivative(1), (f(1.3 + h) - f(1.3 - h)) / (2 * h), 1e-7);
  EXPECT_NEAR(jf.derivative(2), (f(1.3 + h) - 2 * f(1.3) + f(1.3 - h)) / (h * h), 1e-5);
}

TEST(Jet, DivisionInvertsMultiplicationExactly) {
  Rng rng(41);
  auto random_jet = [&] {
    std::array<Rational, 6> c;
    for (auto& v : c) v = q(rng.integer(-50, 50), rng.integer(1, 50));
    if (c[0] == 0) c[0] = q(1);
    return RJet::from_coefficients(c);
  };
  for (int i = 0; i < 200; ++i) {
    const RJet a = random_jet(), b = random_jet();
    EXPECT_EQ((a / b) * b, a);
    EXPECT_EQ((a * b) / b, a);
    EXPECT_EQ(a + b - b, a);
  }
}

TEST(Rational, ExactSqrt) {
  EXPECT_EQ(exact_sqrt(q(9, 16)), q(3, 4));
  EXPECT_EQ(exact_sqrt(q(0)), q(0));
  EXPECT_FALSE(exact_sqrt(q(2)).has_value());
  EXPECT_FALSE(exact_sqrt(q(4, 3)).has_value());
  EXPECT_FALSE(exact_sqrt(q(-4)).has_value());
  EXPECT_EQ(q(6, 8), q(3, 4));
  EXPECT_EQ(to_string(q(6, -8)), "-3/4");
  EXPECT_THROW((void)q(1, 0), PreconditionError);
}

}  // namespace
}  // namespace cauchykl
