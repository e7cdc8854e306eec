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

#include "cauchykl/rational.hpp"

namespace cauchykl {
namespace {

std::optional<BigInt> exact_isqrt(const BigInt& n) {
  if (n < 0) return std::nullopt;
  BigInt r = boost::multiprecision::sqrt(n);
  if (r * r != n) return std::nullopt;
  return r;
}

}  // namespace

std::optional<Rational> exact_sqrt(const Rational& value) {
  // Lowest terms, so value is a square iff numerator and denominator are.
  const auto num = exact_isqrt(BigInt(boost::multiprecision::numerator(value)));
  if (!num) return std::nullopt;
  const auto den = exact_isqrt(BigInt(boost::multiprecision::denominator(value)));
  if (!den) return std::nullopt;
  return Rational(*num, *den);
}

}  // namespace cauchykl
