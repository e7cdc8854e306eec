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

#include "cauchykl/certificate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "cauchykl/errors.hpp"
#include "cauchykl/integral.hpp"

namespace cauchykl::cert {
namespace {

using DJet = Jet<Rational, 3>;
using XJet = Jet<Rational, 1>;

void require_positive_discriminant(const Rational& d, const Rational& e, const Rational& f) {
  if (!(Rational(4) * d * f - e * e > 0)) {
    throw PreconditionError("certificate checks need 4df - e^2 > 0");
  }
}

constexpr std::array<double, 6> kDefaultKGrid = {0.25, 0.5, 1.0, 2.0, 5.0, 10.0};

}  // namespace

Rational phi_partial_d(const Rational& d, const Rational& e, const Rational& f,
                       const Rational& x) {
  if (d * x * x + e * x + f == 0) {
    throw EvaluationError("d x^2 + e x + f vanishes at x", to_double(x));
  }
  return phi_partial_d<Rational>(d, e, f, x);
}

Rational verify_telescoping(const Rational& d, const Rational& e, const Rational& f,
                            const Rational& x) {
  require_positive_discriminant(d, e, f);
  const DJet y = phi_partial_d(DJet::variable(d), DJet(e), DJet(f), DJet(x));
  const Rational lhs =
      TelescopingCertificate::apply_operator(TelescopingCertificate::operator_coefficients(d, e, f), y);
  const XJet psi = TelescopingCertificate::psi(XJet(d), XJet(e), XJet(f), XJet::variable(x));
  return lhs - psi.derivative(1);
}

Rational psi_limit(const Rational& d, const Rational& e, const Rational& f) {
  if (d == 0) throw DomainError("psi limit is undefined for d = 0");
  const Rational e2 = e * e;
  const Rational f2 = f * f;
  const Rational lead = d * d * f2 - Rational(4) * d * e2 * f - Rational(9) * d * f2 * f -
                        e2 * e2 - Rational(7) * e2 * f2 - Rational(6) * f2 * f2;
  return Rational(-2) * e * lead / (d * d * d);
}

Rational square_discriminant_f(const Rational& d, const Rational& e, const Rational& m) {
  if (d == 0) throw DomainError("square-discriminant parametrisation needs d != 0");
  return (e * e + m * m) / (Rational(4) * d);
}

Rational verify_ode_dAdd(const Rational& d, const Rational& e, const Rational& f) {
  require_positive_discriminant(d, e, f);
  const Rational disc = Rational(4) * d * f - e * e;
  const auto root = exact_sqrt(disc);
  if (!root) throw PreconditionError("4df - e^2 is not the square of a rational");
  if ((d - f) * (d - f) + e * e == 0) {
    throw PreconditionError("dA/dd closed form is singular at d = f, e = 0");
  }
  const DJet dj = DJet::variable(d);
  const DJet ej(e);
  const DJet fj(f);
  const DJet disc_j = DJet(Rational(4)) * dj * fj - ej * ej;
  const DJet root_j = sqrt(disc_j, *root);
  const DJet num = (dj - fj) * disc_j + (DJet(Rational(-2)) * dj * fj + ej * ej + DJet(Rational(2)) * fj * fj) * root_j;
  const DJet den = (dj * dj - DJet(Rational(2)) * dj * fj + ej * ej + fj * fj) * disc_j;
  return TelescopingCertificate::apply_operator(
      TelescopingCertificate::operator_coefficients(d, e, f), num / den);
}

KZeroReport verify_K_zero(std::span<const double> d_grid, const quad::QuadratureConfig& config) {
  KZeroReport report;
  const PositiveQuadratic unit(1.0, 0.0, 1.0);
  for (const double d : d_grid) {
    for (const double e : {0.0, d, 1.5 * d}) {
      const PositiveQuadratic q(d, e, d);
      const double closed = std::numbers::pi * std::log(2.0 * d + std::sqrt(4.0 * d * d - e * e));
      const quad::QuadratureResult numeric = quad::integral_A_numeric(unit, q, config);
      const double deviation = std::abs(closed - numeric.value);
      report.cases.push_back({d, e, closed, numeric.value, deviation, numeric.converged});
      report.max_deviation = std::max(report.max_deviation, deviation);
    }
  }
  report.passed = !report.cases.empty() && report.max_deviation <= kKZeroTolerance;
  return report;
}

KZeroReport verify_K_zero() { return verify_K_zero(kDefaultKGrid); }

GFactorizationReport verify_G_factorization(double d, double e, double f) {
  const PositiveQuadratic q(d, e, f);
  const double root = std::sqrt(q.discriminant());
  GFactorizationReport r;
  r.g1 = d + f + root;
  r.g2 = d + f - root;
  r.g3 = (d - f) * (d - f) + e * e;
  const double scale = (d + f) * (d + f);
  r.relative_product_error = std::abs(r.g1 * r.g2 - r.g3) / scale;
  r.product_ok = r.relative_product_error <= kGProductTolerance;
  // d > e^2 / (4f) holds for every positive quadratic.
  r.positivity_checked = r.g3 > kGProductTolerance * scale;
  r.positivity_ok = r.g1 > 0.0 && r.g2 > 0.0;
  return r;
}

}  // namespace cauchykl::cert
