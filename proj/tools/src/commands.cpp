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

#include <cmath>
#include <istream>
#include <ostream>

#include "cauchykl/cauchy.hpp"
#include "cauchykl/cli/commands.hpp"
#include "cauchykl/errors.hpp"
#include "cauchykl/integral.hpp"
#include "cauchykl/quad.hpp"
#include "parallel.hpp"

namespace cauchykl::cli {
namespace {

constexpr std::int64_t kDefaultSamples = 100000;
constexpr std::uint64_t kDefaultSeed = 1;

class Params {
 public:
  Params(Op op, const JobRecord& job) : job_(job) {
    const auto names = op_parameters(op);
    for (const auto& [key, value] : job.params) {
      if (std::find(names.begin(), names.end(), key) == names.end()) {
        throw PreconditionError("unexpected parameter '" + key + "' for " + job.op);
      }
    }
    for (const auto name : names) (void)get(name);
  }

  [[nodiscard]] double get(std::string_view name) const {
    for (const auto& [key, value] : job_.params) {
      if (key == name) return value;
    }
    throw PreconditionError("missing parameter '" + std::string(name) + "' for " + job_.op);
  }

  [[nodiscard]] CauchyDist first() const { return {get("l1"), get("s1")}; }
  [[nodiscard]] CauchyDist second() const { return {get("l2"), get("s2")}; }
  [[nodiscard]] PositiveQuadratic q1() const { return {get("a"), get("b"), get("c")}; }
  [[nodiscard]] PositiveQuadratic q2() const { return {get("d"), get("e"), get("f")}; }

 private:
  const JobRecord& job_;
};

bool is_quadrature(Op op) {
  return op == Op::kl_numeric || op == Op::cross_entropy_numeric || op == Op::integral_a_numeric;
}

quad::QuadratureConfig quadrature_config(const JobRecord& job) {
  if (job.config.samples || job.config.seed) {
    throw PreconditionError(job.op + " takes only rel_tol, abs_tol and max_depth");
  }
  quad::QuadratureConfig c;
  if (job.config.rel_tol) c.relative_tolerance = *job.config.rel_tol;
  if (job.config.abs_tol) c.absolute_tolerance = *job.config.abs_tol;
  if (job.config.max_depth) c.max_refinement_depth = *job.config.max_depth;
  c.validate();
  return c;
}

void set_quadrature(ResultRecord& r, const quad::QuadratureConfig& c, const quad::QuadratureResult& q) {
  r.job->config = {c.relative_tolerance, c.absolute_tolerance, c.max_refinement_depth, {}, {}};
  r.value = q.value;
  r.diagnostics = {q.error_estimate, q.evaluations, {}, q.converged};
}

void evaluate(Op op, const JobRecord& job, ResultRecord& r) {
  const Params p(op, job);
  if (op == Op::mc) {
    if (job.config.rel_tol || job.config.abs_tol || job.config.max_depth) {
      throw PreconditionError("mc takes only samples and seed");
    }
    const std::int64_t samples = job.config.samples.value_or(kDefaultSamples);
    const std::uint64_t seed = job.config.seed.value_or(kDefaultSeed);
    const auto m = quad::kl_monte_carlo(p.first(), p.second(), samples, seed);
    r.job->config = {{}, {}, {}, samples, seed};
    r.value = m.estimate;
    r.diagnostics.standard_error = m.standard_error;
    return;
  }
  if (is_quadrature(op)) {
    const auto c = quadrature_config(job);
    switch (op) {
      case Op::kl_numeric:
        set_quadrature(r, c, quad::kl_numeric(p.first(), p.second(), c));
        return;
      case Op::cross_entropy_numeric:
        set_quadrature(r, c, quad::cross_entropy_numeric(p.first(), p.second(), c));
        return;
      default:
        set_quadrature(r, c, quad::integral_A_numeric(p.q1(), p.q2(), c));
        return;
    }
  }
  if (!job.config.empty()) throw PreconditionError(job.op + " takes no config");
  switch (op) {
    case Op::kl:
      r.value = kl_closed(p.first(), p.second());
      return;
    case Op::cross_entropy:
      r.value = cross_entropy_closed(p.first(), p.second());
      return;
    case Op::entropy:
      r.value = entropy_closed(CauchyDist(p.get("l"), p.get("s")));
      return;
    case Op::integral_a:
      r.value = integral_A_general(p.q1(), p.q2());
      return;
    case Op::prudnikov:
      r.value = prudnikov_special(p.get("a"), p.get("b"), p.get("z"));
      return;
    default:
      throw std::logic_error("unhandled operation");
  }
}

}  // namespace

ResultRecord run_job(const JobRecord& job) {
  ResultRecord r;
  r.job = job;
  const auto op = parse_op(job.op);
  if (!op) {
    r.message = "unknown operation '" + job.op + "'";
    return r;
  }
  try {
    evaluate(*op, job, r);
    r.ok = std::isfinite(r.value);
    if (!r.ok) r.message = "result is not finite";
  } catch (const std::exception& e) {
    r.ok = false;
    r.job = job;
    r.value = 0.0;
    r.diagnostics = {};
    r.message = e.what();
  }
  return r;
}

ResultRecord process_line(std::string_view line) {
  try {
    return run_job(parse_job(line));
  } catch (const std::exception& e) {
    ResultRecord r;
    r.input = std::string(line);
    r.message = e.what();
    return r;
  }
}

std::size_t run_batch(std::istream& in, std::ostream& out, unsigned threads) {
  const std::size_t block = threads > 1 ? 64 * std::size_t{threads} : 1;
  std::vector<std::string> lines;
  std::vector<std::string> written;
  std::vector<char> failed;
  std::size_t errors = 0;
  auto flush = [&] {
    written.assign(lines.size(), {});
    failed.assign(lines.size(), 0);
    detail::parallel_for(lines.size(), threads, [&](std::size_t i) {
      const ResultRecord r = process_line(lines[i]);
      written[i] = format_result(r);
      failed[i] = !r.ok;
    });
    for (std::size_t i = 0; i < lines.size(); ++i) {
      out << written[i] << '\n';
      errors += failed[i] ? 1 : 0;
    }
    out.flush();
    lines.clear();
  };
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    lines.push_back(std::move(line));
    if (lines.size() >= block) flush();
  }
  flush();
  return errors;
}

}  // namespace cauchykl::cli
