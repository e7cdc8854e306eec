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

#include "cauchykl/quad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <string>
#include <vector>

#include "cauchykl/errors.hpp"
#include "cauchykl/random.hpp"

namespace cauchykl::quad {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kDiscrepancyFactor = 2.0;

// Kronrod 15-point abscissae on [-1, 1] (non-negative half); odd indices
// are the 7-point Gauss abscissae.
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

// Grading map t -> theta = (pi/2) g(t), g(t) = (15t - 10t^3 + 3t^5) / 8.
double grade(double t) { return (t * (15.0 + t * t * (-10.0 + 3.0 * t * t))) / 8.0; }

// 1 - g(1 - s) = 5/2 s^3 - 15/8 s^4 + 3/8 s^5, exact near the ends of (-1, 1).
double grade_complement(double s) { return s * s * s * (2.5 + s * (-1.875 + 0.375 * s)); }

struct Node {
  double x;
  double jacobian;  // dx/dt
};

class GradedTangentMap {
 public:
  explicit GradedTangentMap(RealLineFrame frame) : frame_(frame) {}

  Node operator()(double t) const {
    double tangent = 0.0;
    if (std::abs(t) <= 0.5) {
      tangent = std::tan(kHalfPi * grade(t));
    } else {
      // theta = +-(pi/2 - u); tan(theta) = +-1 / tan(u) avoids evaluating
      // tan next to its pole.
      const double u = kHalfPi * grade_complement(1.0 - std::abs(t));
      tangent = std::copysign(1.0 / std::tan(u), t);
    }
    const double one_minus_t2 = (1.0 - t) * (1.0 + t);
    const double dtheta_dt = kHalfPi * 1.875 * one_minus_t2 * one_minus_t2;
    return {frame_.center + frame_.scale * tangent,
            frame_.scale * (1.0 + tangent * tangent) * dtheta_dt};
  }

  /// Inverse of the map for a breakpoint; bisection on the monotone grading.
  double inverse(double x) const {
    const double target = std::atan((x - frame_.center) / frame_.scale) / kHalfPi;
    double lo = -1.0, hi = 1.0;
    for (int i = 0; i < 80; ++i) {
      const double mid = 0.5 * (lo + hi);
      (grade(mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  }

 private:
  RealLineFrame frame_;
};

struct Panel {
  double lo;
  double hi;
  double value;
  double error;
  int depth;
};

struct ByError {
  bool operator()(const Panel& p, const Panel& q) const { return p.error < q.error; }
};

class Integrator {
 public:
  Integrator(const std::function<double(double)>& integrand, RealLineFrame frame)
      : integrand_(integrand), map_(frame) {}

  Panel evaluate(double lo, double hi, int depth) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    std::array<double, 15> f{};
    f[7] = sample(mid);
    for (std::size_t j = 0; j < 7; ++j) {
      const double offset = half * kKronrodNodes[j];
      f[j] = sample(mid - offset);
      f[14 - j] = sample(mid + offset);
    }
    double kronrod = f[7] * kKronrodWeights[7];
    double gauss = f[7] * kGaussWeights[3];
    for (std::size_t j = 0; j < 7; ++j) {
      const double pair = f[j] + f[14 - j];
      kronrod += kKronrodWeights[j] * pair;
      if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
    }
    const double error = std::abs((kronrod - gauss) * half);
    evaluations_ += 15;
    return {lo, hi, kronrod * half, error, depth};
  }

  [[nodiscard]] std::int64_t evaluations() const { return evaluations_; }

 private:
  double sample(double t) {
    const Node node = map_(t);
    const double fx = integrand_(node.x);
    const double weighted = fx * node.jacobian;
    if (!std::isfinite(fx) || !std::isfinite(weighted)) {
      throw EvaluationError("integrand is not finite at x = " + std::to_string(node.x), node.x);
    }
    return weighted;
  }

  const std::function<double(double)>& integrand_;
  GradedTangentMap map_;
  std::int64_t evaluations_ = 0;
};

double tolerance_for(const QuadratureConfig& config, double value) {
  return std::max(config.relative_tolerance * std::abs(value), config.absolute_tolerance);
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(relative_tolerance > 0.0) || !(absolute_tolerance > 0.0)) {
    throw PreconditionError("quadrature tolerances must be positive");
  }
  if (max_refinement_depth < 1) {
    throw PreconditionError("max_refinement_depth must be at least 1");
  }
}

QuadratureResult integrate_real_line(const std::function<double(double)>& integrand,
                                     const QuadratureConfig& config, RealLineFrame frame,
                                     std::span<const double> breakpoints) {
  config.validate();
  if (!std::isfinite(frame.center) || !std::isfinite(frame.scale) || !(frame.scale > 0.0)) {
    throw PreconditionError("quadrature frame needs a finite center and positive scale");
  }
  const GradedTangentMap map(frame);
  std::vector<double> cuts = {-1.0, 1.0};
  for (const double b : breakpoints) {
    if (!std::isfinite(b)) continue;
    const double t = map.inverse(b);
    if (std::abs(t) < 1.0 - 1e-9) cuts.push_back(t);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end(),
                         [](double p, double q) { return q - p < 1e-12; }),
             cuts.end());
  cuts.back() = 1.0;

  Integrator integrator(integrand, frame);
  std::priority_queue<Panel, std::vector<Panel>, ByError> active;
  std::vector<Panel> frozen;
  double value = 0.0;
  double error = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Panel p = integrator.evaluate(cuts[i], cuts[i + 1], 0);
    value += p.value;
    error += p.error;
    active.push(p);
  }

  auto resum = [&] {
    std::vector<Panel> all = frozen;
    auto copy = active;
    while (!copy.empty()) {
      all.push_back(copy.top());
      copy.pop();
    }
    std::sort(all.begin(), all.end(), [](const Panel& p, const Panel& q) { return p.lo < q.lo; });
    value = 0.0;
    error = 0.0;
    for (const Panel& p : all) {
      value += p.value;
      error += p.error;
    }
  };

  std::size_t panels = active.size();
  bool converged = false;
  for (;;) {
    if (error <= tolerance_for(config, value)) {
      resum();
      if (error <= tolerance_for(config, value)) {
        converged = true;
        break;
      }
    }
    if (active.empty() || panels >= kMaxPanels) break;
    const Panel worst = active.top();
    active.pop();
    if (worst.depth >= config.max_refinement_depth) {
      frozen.push_back(worst);
      continue;
    }
    const double mid = 0.5 * (worst.lo + worst.hi);
    Panel left = integrator.evaluate(worst.lo, mid, worst.depth + 1);
    Panel right = integrator.evaluate(mid, worst.hi, worst.depth + 1);
    // A parent that disagrees with its halves by more than its own estimate
    // missed a feature; the halves inherit the discrepancy until refined.
    const double discrepancy = std::abs(left.value + right.value - worst.value);
    if (discrepancy > kDiscrepancyFactor * (left.error + right.error)) {
      left.error = std::max(left.error, 0.5 * discrepancy);
      right.error = std::max(right.error, 0.5 * discrepancy);
    }
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    active.push(left);
    active.push(right);
    ++panels;
  }
  if (!converged) resum();
  return {value, error, integrator.evaluations(), converged};
}

QuadratureResult integral_A_numeric(const PositiveQuadratic& q1, const PositiveQuadratic& q2,
                                    const QuadratureConfig& config) {
  const RealLineFrame frame{q1.vertex(), std::sqrt(q1.discriminant()) / (2.0 * q1.a())};
  const double width2 = std::sqrt(q2.discriminant()) / (2.0 * q2.a());
  const std::array<double, 4> cuts = {q1.vertex(), q2.vertex(), q2.vertex() - width2,
                                      q2.vertex() + width2};
  return integrate_real_line([&](double x) { return std::log(q2(x)) / q1(x); }, config, frame,
                             cuts);
}

// Integration in the frame of `framed`: the other distribution's mode and
// quartiles become panel edges so that its feature cannot hide between nodes.
std::array<double, 4> feature_cuts(const CauchyDist& framed, const CauchyDist& other) {
  return {framed.location(), other.location(), other.location() - other.scale(),
          other.location() + other.scale()};
}

QuadratureResult kl_numeric(const CauchyDist& p1, const CauchyDist& p2,
                            const QuadratureConfig& config) {
  return integrate_real_line(
      [&](double x) {
        const double d1 = density(p1, x);
        return d1 * std::log(d1 / density(p2, x));
      },
      config, {p1.location(), p1.scale()}, feature_cuts(p1, p2));
}

QuadratureResult cross_entropy_numeric(const CauchyDist& p1, const CauchyDist& p2,
                                       const QuadratureConfig& config) {
  return integrate_real_line([&](double x) { return -density(p1, x) * std::log(density(p2, x)); },
                             config, {p1.location(), p1.scale()}, feature_cuts(p1, p2));
}

QuadratureResult f_divergence_numeric(const std::function<double(double)>& generator,
                                      const CauchyDist& p1, const CauchyDist& p2,
                                      const QuadratureConfig& config) {
  return integrate_real_line(
      [&](double x) {
        const double d2 = density(p2, x);
        return generator(density(p1, x) / d2) * d2;
      },
      config, {p2.location(), p2.scale()}, feature_cuts(p2, p1));
}

double kl_generator(double t) noexcept { return t * std::log(t); }

double squared_hellinger_generator(double t) noexcept {
  const double r = std::sqrt(t) - 1.0;
  return r * r;
}

MonteCarloResult kl_monte_carlo(const CauchyDist& p1, const CauchyDist& p2,
                                std::int64_t samples, std::uint64_t seed) {
  if (samples < 2) throw PreconditionError("Monte-Carlo estimation needs at least 2 samples");
  Rng rng(seed);
  // Welford running mean and second moment.
  double mean = 0.0;
  double m2 = 0.0;
  for (std::int64_t i = 0; i < samples; ++i) {
    const double x = quantile(p1, rng.uniform_open());
    const double term = std::log(density(p1, x) / density(p2, x));
    const double delta = term - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (term - mean);
  }
  const auto n = static_cast<double>(samples);
  const double variance = m2 / (n - 1.0);
  return {mean, std::sqrt(variance / n), samples, seed};
}

}  // namespace cauchykl::quad
