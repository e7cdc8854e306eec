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

#pragma once

#include "cauchykl/cauchy.hpp"

namespace cauchykl {

/// Quadratic a x^2 + b x + c that is positive on the whole real line:
/// a > 0, c > 0 and 4ac - b^2 > 0, all coefficients finite.
class PositiveQuadratic {
 public:
  /// Throws PreconditionError if the positivity conditions fail.
  PositiveQuadratic(double a, double b, double c);

  /// (x - l)^2 + s^2 = x^2 - 2l x + l^2 + s^2, the denominator of the density.
  static PositiveQuadratic from_cauchy(const CauchyDist& dist);

  [[nodiscard]] double a() const noexcept { return a_; }
  [[nodiscard]] double b() const noexcept { return b_; }
  [[nodiscard]] double c() const noexcept { return c_; }

  /// 4ac - b^2 > 0.
  [[nodiscard]] double discriminant() const noexcept { return 4.0 * a_ * c_ - b_ * b_; }
  /// Abscissa of the minimum, -b / (2a).
  [[nodiscard]] double vertex() const noexcept { return -b_ / (2.0 * a_); }
  [[nodiscard]] double operator()(double x) const noexcept { return (a_ * x + b_) * x + c_; }

 private:
  double a_;
  double b_;
  double c_;
};

/// Affine change of variable reducing A(a,b,c; d,e,f) to
/// factor * A(1,0,1; reduced.a, reduced.b, reduced.c), where
///
///   reduced = ( d (4ac - b^2) / (4a^2),
///               (ae - bd) sqrt(4ac - b^2) / (2a^2),
///               (4a^2 f - 2abe + b^2 d) / (4a^2) )
///   factor  = 2 / sqrt(4ac - b^2).
struct CanonicalReduction {
  PositiveQuadratic reduced;
  double factor;
};

/// A(q1; q2) = integral over R of log(q2(x)) / q1(x) dx, in closed form:
///   2 pi (log(2af - be + 2cd + sqrt(4ac - b^2) sqrt(4df - e^2)) - log(2a)) / sqrt(4ac - b^2)
/// with (a,b,c) from q1 and (d,e,f) from q2.
[[nodiscard]] double integral_A_general(const PositiveQuadratic& q1,
                                        const PositiveQuadratic& q2) noexcept;

/// A(1,0,1; d,e,f) = pi log(d + f + sqrt(4df - e^2)).
[[nodiscard]] double integral_A_canonical(const PositiveQuadratic& q) noexcept;
/// Validating overload; throws PreconditionError if (d,e,f) is not positive.
[[nodiscard]] double integral_A_canonical(double d, double e, double f);

[[nodiscard]] CanonicalReduction canonical_reduce(const PositiveQuadratic& q1,
                                                  const PositiveQuadratic& q2);

/// dA/dd (1,0,1; d,e,f) in the rational-in-sqrt form
///   pi ((d-f)(4df-e^2) + (-2df + e^2 + 2f^2) sqrt(4df-e^2)) / (((d-f)^2 + e^2)(4df-e^2)).
/// Throws PreconditionError for a non-positive quadratic and SingularPointError
/// on d = f, e = 0, where the denominator vanishes.
[[nodiscard]] double dA_dd_closed(double d, double e, double f);

/// B(d,e,f; x) = integral from 0 to x of y^2 / ((dy^2 + ey + f)(y^2 + 1)) dy,
/// evaluated through the arctan/log primitive. Same error set as dA_dd_closed.
/// B(+inf) - B(-inf) equals dA_dd_closed(d, e, f).
[[nodiscard]] double primitive_B(double d, double e, double f, double x);

/// Closed form of integral over R of log(a^2 - 2abx + x^2) / (x^2 + z^2) dx,
///   (pi / z) log(z^2 + 2az sqrt(1 - b^2) + a^2),
/// valid for a > 0, z > 0, -1 < b <= 1 (DomainError otherwise). For b < 1
/// this is integral_A_general((1,0,z^2), (1,-2ab,a^2)); the b = 1 boundary
/// has a double root inside the logarithm and is only available here.
[[nodiscard]] double prudnikov_special(double a, double b, double z);

}  // namespace cauchykl
