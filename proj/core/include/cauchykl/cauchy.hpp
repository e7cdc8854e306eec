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

#include <utility>

namespace cauchykl {

/// Cauchy distribution with location l and scale s > 0.
///
/// Construction validates the parameters (both finite, scale strictly
/// positive) and throws PreconditionError otherwise, so every live value is
/// a valid distribution.
class CauchyDist {
 public:
  CauchyDist(double location, double scale);

  /// The standard distribution, location 0 and scale 1.
  static CauchyDist standard() noexcept { return CauchyDist(0.0, 1.0, Unchecked{}); }

  [[nodiscard]] double location() const noexcept { return location_; }
  [[nodiscard]] double scale() const noexcept { return scale_; }

  friend bool operator==(const CauchyDist&, const CauchyDist&) = default;

 private:
  struct Unchecked {};
  CauchyDist(double location, double scale, Unchecked) noexcept
      : location_(location), scale_(scale) {}

  double location_;
  double scale_;
};

/// s / (pi (s^2 + (x - l)^2)).
[[nodiscard]] double density(const CauchyDist& dist, double x) noexcept;

/// Inverse CDF l + s tan(pi (u - 1/2)). Throws DomainError unless 0 < u < 1.
[[nodiscard]] double quantile(const CauchyDist& dist, double u);

// Closed forms. All are exact in the sense of being direct evaluations of
// the analytic result; see quad.hpp for the numerical counterparts.

/// KL(p1 : p2) = log(((s1 + s2)^2 + (l1 - l2)^2) / (4 s1 s2)).
///
/// Evaluated as log1p(((s1 - s2)^2 + (l1 - l2)^2) / (4 s1 s2)), which is
/// bit-symmetric in (p1, p2), never negative, and exactly zero for p1 == p2.
/// Falls back to a rescaled logarithmic form when the ratio would overflow.
[[nodiscard]] double kl_closed(const CauchyDist& p1, const CauchyDist& p2) noexcept;

/// h^x(p1 : p2) = log(pi ((s1 + s2)^2 + (l1 - l2)^2) / s2).
[[nodiscard]] double cross_entropy_closed(const CauchyDist& p1, const CauchyDist& p2) noexcept;

/// h(p) = log(4 pi s). Identical to cross_entropy_closed(p, p).
[[nodiscard]] double entropy_closed(const CauchyDist& p) noexcept;

/// Scale family, common location: 2 log((s1 + s2) / (2 sqrt(s1 s2))).
/// Throws PreconditionError unless both scales are finite and positive.
[[nodiscard]] double kl_scale_family(double s1, double s2);

/// Location family, common scale: log(1 + (l1 - l2)^2 / (4 s^2)).
[[nodiscard]] double kl_location_family(double l1, double l2, double s);

/// Maps (p1, p2) to ({0, 1}, {(l2 - l1) / s1, s2 / s1}). Every f-divergence,
/// in particular KL, is invariant under this joint affine change of variable.
[[nodiscard]] std::pair<CauchyDist, CauchyDist> standardize_pair(const CauchyDist& p1,
                                                                 const CauchyDist& p2);

}  // namespace cauchykl
