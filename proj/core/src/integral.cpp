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

#include "cauchykl/integral.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cauchykl/errors.hpp"

namespace cauchykl {
namespace {

constexpr double kPi = std::numbers::pi;

bool all_finite(double a, double b, double c) {
  return std::isfinite(a) && std::isfinite(b) && std::isfinite(c);
}

// Common validation for the auxiliary (d,e,f) forms; returns sqrt(4df - e^2).
double checked_root(double d, double e, double f) {
  const PositiveQuadratic q(d, e, f);
  const double g3 = (d - f) * (d - f) + e * e;
  if (g3 == 0.0) {
    throw SingularPointError(
        "(d - f)^2 + e^2 vanishes at d = f, e = 0; use the derivative of "
        "pi*log(d + f + sqrt(4df - e^2)) instead");
  }
  return std::sqrt(q.discriminant());
}

double primitive_B_displayed(double d, double e, double f, double root, double x) {
  const double q = (d * x + e) * x + f;
  const double bracket = (d - f) * std::atan(x) + 0.5 * e * std::log((x * x + 1.0) / q);
  const double num = 2.0 * root * bracket -
                     4.0 * (d * f - 0.5 * e * e - f * f) * std::atan((2.0 * d * x + e) / root);
  const double den = (2.0 * d * d - 4.0 * d * f + 2.0 * e * e + 2.0 * f * f) * root;
  return num / den;
}

}  // namespace

PositiveQuadratic::PositiveQuadratic(double a, double b, double c) : a_(a), b_(b), c_(c) {
  if (!all_finite(a, b, c)) throw PreconditionError("quadratic coefficients must be finite");
  if (!(a > 0.0) || !(c > 0.0)) {
    throw PreconditionError("quadratic needs positive leading and constant coefficients");
  }
  if (!(discriminant() > 0.0)) {
    throw PreconditionError("quadratic must satisfy 4ac - b^2 > 0");
  }
}

PositiveQuadratic PositiveQuadratic::from_cauchy(const CauchyDist& dist) {
  const double l = dist.location();
  const double s = dist.scale();
  return PositiveQuadratic(1.0, -2.0 * l, l * l + s * s);
}

double integral_A_general(const PositiveQuadratic& q1, const PositiveQuadratic& q2) noexcept {
  const double a = q1.a(), b = q1.b(), c = q1.c();
  const double d = q2.a(), e = q2.b(), f = q2.c();
  const double root1 = std::sqrt(q1.discriminant());
  const double root2 = std::sqrt(q2.discriminant());
  const double arg = 2.0 * a * f - b * e + 2.0 * c * d + root1 * root2;
  return 2.0 * kPi * std::log(arg / (2.0 * a)) / root1;
}

double integral_A_canonical(const PositiveQuadratic& q) noexcept {
  return kPi * std::log(q.a() + q.c() + std::sqrt(q.discriminant()));
}

double integral_A_canonical(double d, double e, double f) {
  return integral_A_canonical(PositiveQuadratic(d, e, f));
}

CanonicalReduction canonical_reduce(const PositiveQuadratic& q1, const PositiveQuadratic& q2) {
  const double a = q1.a(), b = q1.b();
  const double d = q2.a(), e = q2.b(), f = q2.c();
  const double disc = q1.discriminant();
  const double root = std::sqrt(disc);
  const double a2 = a * a;
  return CanonicalReduction{
      PositiveQuadratic(d * disc / (4.0 * a2), (a * e - b * d) * root / (2.0 * a2),
                        (4.0 * a2 * f - 2.0 * a * b * e + b * b * d) / (4.0 * a2)),
      2.0 / root};
}

double dA_dd_closed(double d, double e, double f) {
  const double root = checked_root(d, e, f);
  const double disc = 4.0 * d * f - e * e;
  const double g3 = (d - f) * (d - f) + e * e;
  return kPi * ((d - f) * disc + (-2.0 * d * f + e * e + 2.0 * f * f) * root) / (g3 * disc);
}

double primitive_B(double d, double e, double f, double x) {
  const double root = checked_root(d, e, f);
  if (std::isnan(x)) throw PreconditionError("x must not be NaN");
  return primitive_B_displayed(d, e, f, root, x) - primitive_B_displayed(d, e, f, root, 0.0);
}

double prudnikov_special(double a, double b, double z) {
  if (!all_finite(a, b, z)) throw DomainError("Prudnikov parameters must be finite");
  if (!(a > 0.0)) throw DomainError("Prudnikov integral needs a > 0");
  if (!(z > 0.0)) throw DomainError("Prudnikov integral needs z > 0");
  if (!(b > -1.0 && b <= 1.0)) throw DomainError("Prudnikov integral needs -1 < b <= 1");
  const double cos_part = std::sqrt((1.0 - b) * (1.0 + b));
  return kPi / z * std::log(z * z + 2.0 * a * z * cos_part + a * a);
}

}  // namespace cauchykl
