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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

#include "cauchykl/cauchy.hpp"
#include "cauchykl/integral.hpp"

namespace cauchykl::quad {

struct QuadratureConfig {
  double relative_tolerance = 1e-10;
  double absolute_tolerance = 1e-14;
  int max_refinement_depth = 20;

  /// Throws PreconditionError unless both tolerances are positive and depth >= 1.
  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  /// Sum over panels of |Kronrod15 - Gauss7|, raised to half the parent
  /// discrepancy for halves whose parent disagreed with their sum.
  double error_estimate = 0.0;
  std::int64_t evaluations = 0;
  /// error_estimate <= max(relative_tolerance |value|, absolute_tolerance).
  bool converged = false;

  friend bool operator==(const QuadratureResult&, const QuadratureResult&) = default;
};

/// Affine frame of the compactifying map x = center + scale * tan(theta).
/// Choosing the frame of a Cauchy factor in the integrand makes that factor
/// times the Jacobian constant.
struct RealLineFrame {
  double center = 0.0;
  double scale = 1.0;
};

/// Upper bound on the number of panels one integration may create. Reaching
/// it ends refinement with converged = false, like depth exhaustion.
inline constexpr std::size_t kMaxPanels = 4096;

/// Integral of `integrand` over the real line.
///
/// The line is mapped onto theta in (-pi/2, pi/2) by x = center + scale tan(theta)
/// and theta is graded towards both ends by the quintic smoothstep
/// theta = (pi/2)(15t - 10t^3 + 3t^5)/8, t in (-1, 1), which turns the
/// logarithmic endpoint behaviour of log-rational integrands into a
/// (1-t)^2 log(1-t) zero. The interval is pre-split at `breakpoints`
/// (x-coordinates) and refined by global adaptive bisection with a
/// 7/15-point Gauss-Kronrod pair; a panel is never split beyond
/// max_refinement_depth halvings of its initial width. When the two halves
/// of a split panel sum to a value that differs from the parent by more than
/// twice their combined estimate, each half takes half of that difference as
/// its error, so a feature missed by both rules still drives refinement.
///
/// Throws EvaluationError (carrying the abscissa) if the integrand is not
/// finite at a node, PreconditionError for an invalid config or frame.
/// Failure to reach the tolerance is reported through converged = false.
[[nodiscard]] QuadratureResult integrate_real_line(const std::function<double(double)>& integrand,
                                                   const QuadratureConfig& config = {},
                                                   RealLineFrame frame = {},
                                                   std::span<const double> breakpoints = {});

/// Quadrature of log(q2(x)) / q1(x), framed on q1, split at both vertices
/// and at q2's vertex +- sqrt(4df - e^2) / (2d).
[[nodiscard]] QuadratureResult integral_A_numeric(const PositiveQuadratic& q1,
                                                  const PositiveQuadratic& q2,
                                                  const QuadratureConfig& config = {});

/// Quadrature of p1(x) log(p1(x) / p2(x)), framed on p1 and split at l1, l2
/// and l2 +- s2. cross_entropy_numeric does the same; f_divergence_numeric
/// frames on p2 and splits at l2, l1 and l1 +- s1.
[[nodiscard]] QuadratureResult kl_numeric(const CauchyDist& p1, const CauchyDist& p2,
                                          const QuadratureConfig& config = {});

/// Quadrature of -p1(x) log p2(x).
[[nodiscard]] QuadratureResult cross_entropy_numeric(const CauchyDist& p1, const CauchyDist& p2,
                                                     const QuadratureConfig& config = {});

/// Quadrature of generator(p1(x) / p2(x)) p2(x). The generator is assumed
/// convex with generator(1) = 0; that is not checked.
[[nodiscard]] QuadratureResult f_divergence_numeric(const std::function<double(double)>& generator,
                                                    const CauchyDist& p1, const CauchyDist& p2,
                                                    const QuadratureConfig& config = {});

/// t log t; the f-divergence it generates is KL.
[[nodiscard]] double kl_generator(double t) noexcept;
/// (sqrt(t) - 1)^2; generates twice the squared Hellinger distance.
[[nodiscard]] double squared_hellinger_generator(double t) noexcept;

struct MonteCarloResult {
  double estimate = 0.0;
  /// Sample standard deviation (n - 1 normalisation) over sqrt(samples).
  double standard_error = 0.0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const MonteCarloResult&, const MonteCarloResult&) = default;
};

/// Plain Monte-Carlo estimate of KL(p1 : p2): x_i = quantile(p1, u_i) with u_i
/// from Rng(seed), averaging log(p1(x_i) / p2(x_i)). For Cauchy pairs the log
/// ratio is bounded, so the estimator has finite variance.
/// Throws PreconditionError if samples < 2.
[[nodiscard]] MonteCarloResult kl_monte_carlo(const CauchyDist& p1, const CauchyDist& p2,
                                              std::int64_t samples, std::uint64_t seed);

}  // namespace cauchykl::quad
