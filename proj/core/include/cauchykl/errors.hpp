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

#include <stdexcept>
#include <string>

namespace cauchykl {

/// Argument outside the mathematical domain of an operation
/// (quantile level not in (0,1), Prudnikov parameters out of range, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A type invariant or operation precondition does not hold, e.g. a
/// non-positive scale or a quadratic with non-positive discriminant.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The auxiliary closed forms for dA/dd and B are undefined on d = f, e = 0
/// (their common denominator (d-f)^2 + e^2 vanishes). The integral itself is
/// smooth there; differentiate pi*log(d + f + sqrt(4df - e^2)) instead.
class SingularPointError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Integrand returned a non-finite value.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, double abscissa)
      : std::runtime_error(what), abscissa_(abscissa) {}

  [[nodiscard]] double abscissa() const noexcept { return abscissa_; }

 private:
  double abscissa_;
};

}  // namespace cauchykl
