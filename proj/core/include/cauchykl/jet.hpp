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

#include <array>
#include <cmath>
#include <concepts>
#include <cstddef>

namespace cauchykl {

/// Truncated Taylor expansion c0 + c1 h + ... + cN h^N of a quantity with
/// respect to one parameter at a fixed point. Arithmetic propagates the
/// coefficients exactly for exact scalars (Rational); transcendental
/// functions need either a floating scalar or an explicitly supplied head.
///
/// Coefficients are normalised Taylor coefficients, so the k-th derivative
/// is k! * coefficient(k).
template <class T, std::size_t N>
class Jet {
 public:
  static constexpr std::size_t order = N;

  Jet() : c_{} { c_.fill(T(0)); }
  /// Constant: head `value`, higher coefficients zero.
  Jet(const T& value) : Jet() { c_[0] = value; }  // NOLINT(google-explicit-constructor)

  /// The expansion variable itself at `point`.
  static Jet variable(const T& point) {
    Jet j(point);
    if constexpr (N >= 1) j.c_[1] = T(1);
    return j;
  }

  static Jet from_coefficients(const std::array<T, N + 1>& coeffs) {
    Jet j;
    j.c_ = coeffs;
    return j;
  }

  [[nodiscard]] const T& operator[](std::size_t k) const { return c_[k]; }
  [[nodiscard]] T& operator[](std::size_t k) { return c_[k]; }
  [[nodiscard]] const T& value() const { return c_[0]; }
  [[nodiscard]] const std::array<T, N + 1>& coefficients() const { return c_; }

  /// k-th derivative, k! c_k.
  [[nodiscard]] T derivative(std::size_t k) const {
    T r = c_[k];
    for (std::size_t i = 2; i <= k; ++i) r *= T(static_cast<long>(i));
    return r;
  }

  Jet operator-() const {
    Jet r;
    for (std::size_t k = 0; k <= N; ++k) r.c_[k] = -c_[k];
    return r;
  }

  Jet& operator+=(const Jet& o) {
    for (std::size_t k = 0; k <= N; ++k) c_[k] += o.c_[k];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    for (std::size_t k = 0; k <= N; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  Jet& operator*=(const Jet& o) { return *this = *this * o; }
  Jet& operator/=(const Jet& o) { return *this = *this / o; }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }

  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet r;
    for (std::size_t k = 0; k <= N; ++k) {
      T acc(0);
      for (std::size_t i = 0; i <= k; ++i) acc += a.c_[i] * b.c_[k - i];
      r.c_[k] = acc;
    }
    return r;
  }

  /// q_k = (a_k - sum_{i=1..k} b_i q_{k-i}) / b_0
  friend Jet operator/(const Jet& a, const Jet& b) {
    Jet q;
    for (std::size_t k = 0; k <= N; ++k) {
      T acc = a.c_[k];
      for (std::size_t i = 1; i <= k; ++i) acc -= b.c_[i] * q.c_[k - i];
      q.c_[k] = acc / b.c_[0];
    }
    return q;
  }

  friend bool operator==(const Jet&, const Jet&) = default;

 private:
  std::array<T, N + 1> c_;
};

/// Square root with a caller-supplied head r0, r0^2 == a0. Keeps every
/// coefficient rational when r0 is.
///   r_k = (a_k - sum_{i=1..k-1} r_i r_{k-i}) / (2 r0)
template <class T, std::size_t N>
Jet<T, N> sqrt(const Jet<T, N>& a, const T& head) {
  Jet<T, N> r(head);
  const T twice = head + head;
  for (std::size_t k = 1; k <= N; ++k) {
    T acc = a[k];
    for (std::size_t i = 1; i < k; ++i) acc -= r[i] * r[k - i];
    r[k] = acc / twice;
  }
  return r;
}

template <std::floating_point T, std::size_t N>
Jet<T, N> sqrt(const Jet<T, N>& a) {
  return sqrt(a, std::sqrt(a.value()));
}

/// l_k = (a_k - (1/k) sum_{i=1..k-1} i l_i a_{k-i}) / a_0
template <std::floating_point T, std::size_t N>
Jet<T, N> log(const Jet<T, N>& a) {
  Jet<T, N> l(std::log(a.value()));
  for (std::size_t k = 1; k <= N; ++k) {
    T acc(0);
    for (std::size_t i = 1; i < k; ++i) acc += T(i) * l[i] * a[k - i];
    l[k] = (a[k] - acc / T(k)) / a.value();
  }
  return l;
}

/// atan via its derivative a' / (1 + a^2), integrated term by term.
template <std::floating_point T, std::size_t N>
Jet<T, N> atan(const Jet<T, N>& a) {
  Jet<T, N> r(std::atan(a.value()));
  if constexpr (N >= 1) {
    Jet<T, N> da;
    for (std::size_t k = 0; k < N; ++k) da[k] = T(k + 1) * a[k + 1];
    const Jet<T, N> w = da / (Jet<T, N>(T(1)) + a * a);
    for (std::size_t k = 1; k <= N; ++k) r[k] = w[k - 1] / T(k);
  }
  return r;
}

}  // namespace cauchykl
