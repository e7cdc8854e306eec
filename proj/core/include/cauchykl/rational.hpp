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

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "cauchykl/errors.hpp"

namespace cauchykl {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
// Expression templates are disabled so that mixed expressions with Jet<Rational, N>
// convert through a single user-defined conversion.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

/// Throws PreconditionError if den == 0.
[[nodiscard]] inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw PreconditionError("rational denominator must be non-zero");
  BigInt n(num), d(den);
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return Rational(n, d);
}

/// Exact square root if `value` is the square of a non-negative rational.
[[nodiscard]] std::optional<Rational> exact_sqrt(const Rational& value);

[[nodiscard]] inline double to_double(const Rational& value) {
  return value.convert_to<double>();
}

[[nodiscard]] inline std::string to_string(const Rational& value) { return value.str(); }

}  // namespace cauchykl
