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
#include <cstddef>
#include <span>
#include <vector>

#include "cauchykl/jet.hpp"
#include "cauchykl/quad.hpp"
#include "cauchykl/rational.hpp"

namespace cauchykl::cert {

/// d/dd of log(d x^2 + e x + f) / (x^2 + 1), i.e. x^2 / ((d x^2 + e x + f)(x^2 + 1)).
/// Generic over the scalar, so a Jet in d carries the d-derivatives along.
template <class T>
T phi_partial_d(const T& d, const T& e, const T& f, const T& x) {
  const T x2 = x * x;
  return x2 / ((d * x2 + e * x + f) * (x2 + T(1)));
}

/// Checked exact evaluation; throws EvaluationError if d x^2 + e x + f == 0.
Rational phi_partial_d(const Rational& d, const Rational& e, const Rational& f,
                       const Rational& x);

/// Creative-telescoping certificate for the special integrand
/// phi = log(d x^2 + e x + f) / (x^2 + 1): an operator L in d and a rational
/// function psi with
///
///   L[dphi/dd](d,e,f; x) = dpsi/dx (d,e,f; x),
///   psi = -2 x P(d,e,f; x) / (d x^2 + e x + f)^2 * dphi/dd,
///
/// where P has degree 5 in x. Integrating over x, and using that psi has the
/// same limit at both infinities, gives L[dA/dd] = 0.
struct TelescopingCertificate {
  /// Coefficients (c0, c1, c2, c3) of L y = c3 y''' + c2 y'' + c1 y' + c0 y,
  /// derivatives taken in d.
  template <class T>
  static std::array<T, 4> operator_coefficients(const T& d, const T& e, const T& f) {
    const T d2 = d * d, d3 = d2 * d;
    const T e2 = e * e, e4 = e2 * e2;
    const T f2 = f * f, f3 = f2 * f, f4 = f3 * f, f5 = f4 * f;
    const T c3 = (T(2) * d * f + e2 + T(6) * f2) * (T(4) * d * f - e2) *
                 (d2 - T(2) * d * f + e2 + f2);
    const T c2 = T(60) * d3 * f2 + T(24) * d2 * e2 * f + T(132) * d2 * f3 - T(6) * d * e4 -
                 T(60) * d * e2 * f2 - T(252) * d * f4 + T(18) * e4 * f + T(108) * e2 * f3 +
                 T(60) * f5;
    const T c1 = T(96) * d2 * f2 + T(60) * d * e2 * f + T(336) * d * f3 - T(6) * e4 -
                 T(84) * e2 * f2 - T(240) * f4;
    const T c0 = T(24) * (d * f + e2 + T(5) * f2) * f;
    return {c0, c1, c2, c3};
  }

  /// Coefficients of P in increasing powers of x.
  template <class T>
  static std::array<T, 6> p_coefficients(const T& d, const T& e, const T& f) {
    const T d2 = d * d;
    const T e2 = e * e, e4 = e2 * e2;
    const T f2 = f * f, f3 = f2 * f, f4 = f3 * f;
    const T tail = d * f + e2 + T(5) * f2;
    return {
        -T(4) * f3 * tail,
        -T(9) * e * f2 * tail,
        -f * (T(9) * d * e2 * f + T(16) * d * f3 + T(6) * e4 + T(37) * e2 * f2 + T(32) * f4),
        e * (d2 * f2 - T(4) * d * e2 * f - T(18) * d * f3 - e4 - T(16) * e2 * f2 - T(51) * f4),
        -T(3) * f * (T(3) * d * e2 * f + T(4) * d * f3 + T(2) * e4 + T(11) * e2 * f2 + T(4) * f4),
        e * (d2 * f2 - T(4) * d * e2 * f - T(9) * d * f3 - e4 - T(7) * e2 * f2 - T(6) * f4),
    };
  }

  template <class T>
  static T p_polynomial(const T& d, const T& e, const T& f, const T& x) {
    const auto p = p_coefficients(d, e, f);
    T acc = p[5];
    for (std::size_t k = 5; k-- > 0;) acc = acc * x + p[k];
    return acc;
  }

  template <class T>
  static T psi(const T& d, const T& e, const T& f, const T& x) {
    const T q = d * x * x + e * x + f;
    return T(-2) * x * p_polynomial(d, e, f, x) / (q * q) * phi_partial_d(d, e, f, x);
  }

  /// (L y)(d) from a jet of y in d of order >= 3.
  template <class T, std::size_t N>
    requires(N >= 3)
  static T apply_operator(const std::array<T, 4>& coeffs, const Jet<T, N>& y) {
    T acc(0);
    for (std::size_t k = 0; k < 4; ++k) acc += coeffs[k] * y.derivative(k);
    return acc;
  }
};

/// L[dphi/dd] - dpsi/dx at (d,e,f; x), exactly. The left side comes from an
/// order-3 jet in d, the right side from an order-1 jet in x. Zero is the
/// certified identity. Throws PreconditionError unless 4df - e^2 > 0.
[[nodiscard]] Rational verify_telescoping(const Rational& d, const Rational& e,
                                          const Rational& f, const Rational& x);

/// Common limit of psi at +inf and -inf,
///   -2e (d^2f^2 - 4de^2f - 9df^3 - e^4 - 7e^2f^2 - 6f^4) / d^3.
/// Throws DomainError if d == 0.
[[nodiscard]] Rational psi_limit(const Rational& d, const Rational& e, const Rational& f);

/// f = (e^2 + m^2) / (4d), which makes 4df - e^2 = m^2 a rational square.
[[nodiscard]] Rational square_discriminant_f(const Rational& d, const Rational& e,
                                             const Rational& m);

/// L applied to the closed form of dA/dd (1,0,1; d,e,f), exactly.
///
/// The closed form is pi times a function rational in (d, e, f, sqrt(4df - e^2));
/// since L is linear the pi factor is dropped. With 4df - e^2 = m^2 for a
/// rational m > 0, the square root is propagated as a jet seeded with head m,
/// keeping every coefficient rational. Throws PreconditionError if the
/// discriminant is not a positive rational square or if (d-f)^2 + e^2 == 0.
[[nodiscard]] Rational verify_ode_dAdd(const Rational& d, const Rational& e, const Rational& f);

/// Maximal admissible |closed - quadrature| in verify_K_zero.
inline constexpr double kKZeroTolerance = 1e-8;

struct KZeroCase {
  double d;
  double e;
  double closed;
  double numeric;
  double deviation;
  bool converged;
};

struct KZeroReport {
  std::vector<KZeroCase> cases;
  double max_deviation = 0.0;
  bool passed = false;
};

/// Confirms the integration constant K(e, f) vanishes: for each d in the grid
/// and e in {0, d, 3d/2}, compares pi log(2d + sqrt(4d^2 - e^2)) with
/// quadrature of A(1,0,1; d,e,d).
[[nodiscard]] KZeroReport verify_K_zero(std::span<const double> d_grid,
                                        const quad::QuadratureConfig& config = {});
[[nodiscard]] KZeroReport verify_K_zero();

struct GFactorizationReport {
  double g1 = 0.0;  // d + f + sqrt(4df - e^2)
  double g2 = 0.0;  // d + f - sqrt(4df - e^2)
  double g3 = 0.0;  // (d - f)^2 + e^2
  /// |g1 g2 - g3| / (d + f)^2; g2 cancels down from magnitude d + f, so the
  /// product carries an error relative to that scale.
  double relative_product_error = 0.0;
  bool product_ok = false;
  /// Positivity of g1, g2 is only asserted off the singular set g3 == 0.
  bool positivity_checked = false;
  bool positivity_ok = false;
  [[nodiscard]] bool passed() const { return product_ok && (!positivity_checked || positivity_ok); }
};

inline constexpr double kGProductTolerance = 1e-12;

/// Throws PreconditionError unless (d,e,f) is a positive quadratic.
[[nodiscard]] GFactorizationReport verify_G_factorization(double d, double e, double f);

}  // namespace cauchykl::cert
