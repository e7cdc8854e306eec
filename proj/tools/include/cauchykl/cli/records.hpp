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
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cauchykl::cli {

enum class Op {
  kl,
  kl_numeric,
  cross_entropy,
  cross_entropy_numeric,
  entropy,
  integral_a,
  integral_a_numeric,
  prudnikov,
  mc,
};

[[nodiscard]] std::optional<Op> parse_op(std::string_view name) noexcept;
[[nodiscard]] std::string_view op_name(Op op) noexcept;
/// Required parameter names, in the order single commands emit them.
[[nodiscard]] std::span<const std::string_view> op_parameters(Op op) noexcept;

/// Malformed record text.
class RecordError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Optional per-job overrides. Quadrature ops read the tolerances and depth,
/// mc reads samples and seed; any other key is rejected.
struct JobConfig {
  std::optional<double> rel_tol;
  std::optional<double> abs_tol;
  std::optional<int> max_depth;
  std::optional<std::int64_t> samples;
  std::optional<std::uint64_t> seed;

  [[nodiscard]] bool empty() const noexcept {
    return !rel_tol && !abs_tol && !max_depth && !samples && !seed;
  }
  friend bool operator==(const JobConfig&, const JobConfig&) = default;
};

struct JobRecord {
  std::string op;
  /// Kept in input order; the echo in the result preserves it.
  std::vector<std::pair<std::string, double>> params;
  JobConfig config;

  friend bool operator==(const JobRecord&, const JobRecord&) = default;
};

struct Diagnostics {
  std::optional<double> error_estimate;
  std::optional<std::int64_t> evaluations;
  std::optional<double> standard_error;
  std::optional<bool> converged;

  [[nodiscard]] bool empty() const noexcept {
    return !error_estimate && !evaluations && !standard_error && !converged;
  }
  friend bool operator==(const Diagnostics&, const Diagnostics&) = default;
};

struct ResultRecord {
  /// Echo of the job; absent when the input line could not be parsed.
  std::optional<JobRecord> job;
  /// The offending line, set only when `job` is absent.
  std::string input;
  bool ok = false;
  double value = 0.0;
  Diagnostics diagnostics;
  std::string message;

  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

/// 17 significant digits, enough for any double to round-trip.
[[nodiscard]] std::string format_number(double v);

/// One JSON object per line:
///   {"op":"kl","params":{"l1":0,"s1":1,"l2":1,"s2":1},"config":{...}}
/// "config" is optional. Throws RecordError on anything else.
[[nodiscard]] JobRecord parse_job(std::string_view line);
[[nodiscard]] std::string format_job(const JobRecord& job);

/// Key order: op, params, config, status, value, diagnostics, or
/// op, params, config, status, message for errors, or input, status, message
/// for unparseable lines. No trailing newline.
[[nodiscard]] std::string format_result(const ResultRecord& result);
[[nodiscard]] ResultRecord parse_result(std::string_view line);

}  // namespace cauchykl::cli
