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

// Double-double helpers for the closed forms. A value is hi + lo with
// |lo| <= ulp(hi) / 2; all operations use fma-based error-free products.

#include <cmath>

namespace cauchykl::detail {

struct DoubleDouble {
  double hi;
  double lo;

  [[nodiscard]] double value() const { return hi + lo; }
};

inline DoubleDouble two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline DoubleDouble quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline DoubleDouble two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline DoubleDouble operator+(DoubleDouble a, DoubleDouble b) {
  const DoubleDouble s = two_sum(a.hi, b.hi);
  const DoubleDouble t = two_sum(a.lo, b.lo);
  DoubleDouble r = quick_two_sum(s.hi, s.lo + t.hi);
  return quick_two_sum(r.hi, r.lo + t.lo);
}

inline DoubleDouble operator-(DoubleDouble a) { return {-a.hi, -a.lo}; }
inline DoubleDouble operator-(DoubleDouble a, DoubleDouble b) { return a + (-b); }

inline DoubleDouble operator*(DoubleDouble a, DoubleDouble b) {
  const DoubleDouble p = two_prod(a.hi, b.hi);
  return quick_two_sum(p.hi, p.lo + (a.hi * b.lo + a.lo * b.hi));
}

inline DoubleDouble operator/(DoubleDouble a, DoubleDouble b) {
  const double q1 = a.hi / b.hi;
  const DoubleDouble r = a - b * DoubleDouble{q1, 0.0};
  const double q2 = r.hi / b.hi;
  const DoubleDouble r2 = r - b * DoubleDouble{q2, 0.0};
  const double q3 = r2.hi / b.hi;
  const DoubleDouble q = quick_two_sum(q1, q2);
  return q + DoubleDouble{q3, 0.0};
}

/// Scaling by a power of two is exact.
inline DoubleDouble scale2(DoubleDouble a, double power_of_two) {
  return {a.hi * power_of_two, a.lo * power_of_two};
}

inline DoubleDouble sqrt_dd(double a) {
  const double r = std::sqrt(a);
  // a - r^2 exactly, then one Newton correction.
  const double residual = std::fma(-r, r, a);
  return quick_two_sum(r, residual / (2.0 * r));
}

// pi to double-double precision.
inline constexpr DoubleDouble kPiDD{3.141592653589793116, 1.2246467991473532e-16};

}  // namespace cauchykl::detail
