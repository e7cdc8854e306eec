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

#include "cauchykl/cauchy.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "cauchykl/errors.hpp"
#include "double_double.hpp"

namespace cauchykl {
namespace {

using detail::DoubleDouble;

constexpr double kPi = std::numbers::pi;

void require_scale(double s, const char* what) {
  if (!std::isfinite(s) || !(s > 0.0)) {
    throw PreconditionError(std::string(what) + " must be positive and finite");
  }
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw PreconditionError(std::string(what) + " must be finite");
}

// log(u^2 + v^2) without overflow or underflow; -inf for u = v = 0.
double log_sum_squares(double u, double v) {
  const double m = std::max(std::abs(u), std::abs(v));
  if (m == 0.0) return -std::numeric_limits<double>::infinity();
  const double um = u / m, vm = v / m;
  return 2.0 * std::log(m) + std::log(um * um + vm * vm);
}

DoubleDouble scaled(DoubleDouble a, int k) { return {std::ldexp(a.hi, k), std::ldexp(a.lo, k)}; }

// log1p(excess / spread) if every intermediate stays in the normal range.
std::optional<double> kl_log1p_ratio(DoubleDouble ds, DoubleDouble dl, double s1, double s2) {
  const DoubleDouble excess = ds * ds + dl * dl;
  const DoubleDouble spread = detail::scale2(detail::two_prod(s1, s2), 4.0);
  if (!std::isfinite(excess.hi) || !(spread.hi >= DBL_MIN)) return std::nullopt;
  const double ratio = (excess / spread).value();
  if (!std::isfinite(ratio)) return std::nullopt;
  return std::log1p(ratio);
}

}  // namespace

CauchyDist::CauchyDist(double location, double scale) : location_(location), scale_(scale) {
  require_finite(location, "location");
  if (!std::isfinite(scale) || !(scale > 0.0)) {
    throw PreconditionError("scale must be positive");
  }
}

double density(const CauchyDist& dist, double x) noexcept {
  const double t = (x - dist.location()) / dist.scale();
  return 1.0 / (kPi * dist.scale() * (1.0 + t * t));
}

double quantile(const CauchyDist& dist, double u) {
  if (!(u > 0.0 && u < 1.0)) {
    throw DomainError("quantile level must lie in the open interval (0, 1)");
  }
  return dist.location() + dist.scale() * std::tan(kPi * (u - 0.5));
}

double kl_closed(const CauchyDist& p1, const CauchyDist& p2) noexcept {
  const double s1 = p1.scale();
  const double s2 = p2.scale();
  // (s1 + s2)^2 - 4 s1 s2 = (s1 - s2)^2, so the log argument is 1 + excess / spread.
  // Both are formed in double-double; every step is symmetric under (p1, p2)
  // exchange, so the result is too.
  const DoubleDouble ds = detail::two_sum(s1, -s2);
  const DoubleDouble dl = detail::two_sum(p1.location(), -p2.location());
  if (const auto r = kl_log1p_ratio(ds, dl, s1, s2)) return *r;
  if (std::isfinite(dl.hi)) {
    // Spread below the normal range: KL is invariant under a joint change of
    // scale, and a power of two keeps every operand exact.
    const int k = -std::ilogb(std::max(s1, s2));
    if (const auto r = kl_log1p_ratio(scaled(ds, k), scaled(dl, k), std::ldexp(s1, k),
                                      std::ldexp(s2, k))) {
      return *r;
    }
  }
  // The ratio is beyond the double range, where log1p(r) == log(r).
  const double l1 = p1.location(), l2 = p2.location();
  const double log_excess = std::isfinite(dl.hi) ? log_sum_squares(ds.hi, dl.hi)
                                                 : 2.0 * std::log(2.0) +
                                                       log_sum_squares(0.5 * s1 - 0.5 * s2,
                                                                       0.5 * l1 - 0.5 * l2);
  const double log_ratio = log_excess - (std::log(4.0) + std::log(s1) + std::log(s2));
  return log_ratio > 0.0 ? log_ratio + std::log1p(std::exp(-log_ratio))
                         : std::log1p(std::exp(log_ratio));
}

double cross_entropy_closed(const CauchyDist& p1, const CauchyDist& p2) noexcept {
  const double s1 = p1.scale();
  const double s2 = p2.scale();
  const DoubleDouble sum = detail::two_sum(s1, s2);
  const DoubleDouble dl = detail::two_sum(p1.location(), -p2.location());
  const DoubleDouble num = sum * sum + dl * dl;
  if (std::isfinite(num.hi)) {
    const double arg = (detail::kPiDD * num / DoubleDouble{s2, 0.0}).value();
    if (std::isfinite(arg) && arg >= DBL_MIN) return std::log(arg);
  }
  const double l1 = p1.location(), l2 = p2.location();
  const double log_num = std::isfinite(sum.hi) && std::isfinite(dl.hi)
                             ? log_sum_squares(sum.hi, dl.hi)
                             : 2.0 * std::log(2.0) +
                                   log_sum_squares(0.5 * s1 + 0.5 * s2, 0.5 * l1 - 0.5 * l2);
  return std::log(kPi) + log_num - std::log(s2);
}

double entropy_closed(const CauchyDist& p) noexcept { return cross_entropy_closed(p, p); }

double kl_scale_family(double s1, double s2) {
  require_scale(s1, "s1");
  require_scale(s2, "s2");
  // (s1 + s2) / (2 sqrt(s1 s2)) = 1 + (sqrt(s1) - sqrt(s2))^2 / (2 sqrt(s1) sqrt(s2))
  const DoubleDouble r1 = detail::sqrt_dd(s1);
  const DoubleDouble r2 = detail::sqrt_dd(s2);
  const DoubleDouble gap = r1 - r2;
  const double ratio = (gap * gap / detail::scale2(r1 * r2, 2.0)).value();
  if (std::isfinite(ratio)) return 2.0 * std::log1p(ratio);
  return 2.0 * (2.0 * std::log(std::abs(gap.hi)) - std::log(2.0) - std::log(r1.hi) - std::log(r2.hi));
}

double kl_location_family(double l1, double l2, double s) {
  require_finite(l1, "l1");
  require_finite(l2, "l2");
  require_scale(s, "s");
  const DoubleDouble diff = detail::two_sum(l1, -l2);
  const double half_gap = 0.5 * l1 - 0.5 * l2;
  // log|r| without forming r, which may overflow.
  const double log_r = std::log(std::abs(half_gap)) - std::log(s);
  if (log_r > 345.0) return 2.0 * log_r;
  if (!std::isfinite(diff.hi)) return std::log1p((half_gap / s) * (half_gap / s));
  const DoubleDouble r = diff / DoubleDouble{2.0 * s, 0.0};
  return std::log1p((r * r).value());
}

std::pair<CauchyDist, CauchyDist> standardize_pair(const CauchyDist& p1, const CauchyDist& p2) {
  const double s1 = p1.scale();
  return {CauchyDist::standard(),
          CauchyDist((p2.location() - p1.location()) / s1, p2.scale() / s1)};
}

}  // namespace cauchykl
