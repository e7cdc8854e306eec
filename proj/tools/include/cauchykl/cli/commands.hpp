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
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cauchykl/cli/records.hpp"

namespace cauchykl::cli {

/// Evaluates one job. Never throws: every failure becomes an error record.
/// The operation name is checked before anything else. Ops that take a
/// config get their effective config (defaults filled in) echoed back.
[[nodiscard]] ResultRecord run_job(const JobRecord& job);

/// parse_job + run_job; unparseable lines give an error record echoing the input.
[[nodiscard]] ResultRecord process_line(std::string_view line);

/// Reads newline-delimited jobs from `in` and writes one result per
/// non-blank line to `out`, in input order. With threads > 1 lines are
/// evaluated in blocks on a worker pool and written back in order.
/// Returns the number of error records.
std::size_t run_batch(std::istream& in, std::ostream& out, unsigned threads = 1);

enum class Suite { closed_vs_quadrature, certificate, ode, monte_carlo, all };

struct VerifyOptions {
  Suite suite = Suite::all;
  std::int64_t count = 100;
  std::uint64_t seed = 1;
  /// Samples per point in the monte-carlo suite.
  std::int64_t samples = 100000;
  unsigned threads = 1;
};

/// Share of monte-carlo points that must land within 4 standard errors.
inline constexpr double kMonteCarloPassFraction = 0.95;

/// Runs the suites, writing one summary record per check and one record per
/// failing point. Returns the number of failed checks. Throws
/// PreconditionError if count < 1.
std::size_t run_verify(const VerifyOptions& options, std::ostream& out);

/// Full command line without the program name. Returns the exit status.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace cauchykl::cli
