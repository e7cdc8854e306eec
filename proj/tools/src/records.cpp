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

#include "cauchykl/cli/records.hpp"

#include <array>
#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace cauchykl::cli {
namespace {

using Json = nlohmann::ordered_json;

struct OpInfo {
  Op op;
  std::string_view name;
  std::span<const std::string_view> params;
};

constexpr std::array<std::string_view, 4> kPairParams{"l1", "s1", "l2", "s2"};
constexpr std::array<std::string_view, 2> kSingleParams{"l", "s"};
constexpr std::array<std::string_view, 6> kQuadraticParams{"a", "b", "c", "d", "e", "f"};
constexpr std::array<std::string_view, 3> kPrudnikovParams{"a", "b", "z"};

constexpr std::array<OpInfo, 9> kOps{{
    {Op::kl, "kl", kPairParams},
    {Op::kl_numeric, "kl-numeric", kPairParams},
    {Op::cross_entropy, "cross-entropy", kPairParams},
    {Op::cross_entropy_numeric, "cross-entropy-numeric", kPairParams},
    {Op::entropy, "entropy", kSingleParams},
    {Op::integral_a, "integral-a", kQuadraticParams},
    {Op::integral_a_numeric, "integral-a-numeric", kQuadraticParams},
    {Op::prudnikov, "prudnikov", kPrudnikovParams},
    {Op::mc, "mc", kPairParams},
}};

std::string quote(std::string_view s) {
  return Json(std::string(s)).dump(-1, ' ', false, Json::error_handler_t::replace);
}

Json parse_object(std::string_view line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw RecordError(std::string("malformed record: ") + e.what());
  }
  if (!j.is_object()) throw RecordError("record must be a JSON object");
  return j;
}

double as_double(const Json& v, const std::string& key) {
  if (!v.is_number()) throw RecordError("'" + key + "' must be a number");
  return v.get<double>();
}

std::int64_t as_int(const Json& v, const std::string& key) {
  if (v.is_number_unsigned()) {
    const auto u = v.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(INT64_MAX)) throw RecordError("'" + key + "' out of range");
    return static_cast<std::int64_t>(u);
  }
  if (!v.is_number_integer()) throw RecordError("'" + key + "' must be an integer");
  return v.get<std::int64_t>();
}

std::vector<std::pair<std::string, double>> parse_params(const Json& j) {
  if (!j.is_object()) throw RecordError("'params' must be an object");
  std::vector<std::pair<std::string, double>> out;
  for (const auto& [key, value] : j.items()) out.emplace_back(key, as_double(value, key));
  return out;
}

JobConfig parse_config(const Json& j) {
  if (!j.is_object()) throw RecordError("'config' must be an object");
  JobConfig c;
  for (const auto& [key, value] : j.items()) {
    if (key == "rel_tol") {
      c.rel_tol = as_double(value, key);
    } else if (key == "abs_tol") {
      c.abs_tol = as_double(value, key);
    } else if (key == "max_depth") {
      const std::int64_t d = as_int(value, key);
      if (d < INT32_MIN || d > INT32_MAX) throw RecordError("'max_depth' out of range");
      c.max_depth = static_cast<int>(d);
    } else if (key == "samples") {
      c.samples = as_int(value, key);
    } else if (key == "seed") {
      if (!value.is_number_unsigned()) throw RecordError("'seed' must be a non-negative integer");
      c.seed = value.get<std::uint64_t>();
    } else {
      throw RecordError("unknown config key '" + key + "'");
    }
  }
  return c;
}

JobRecord parse_job_object(const Json& j) {
  JobRecord job;
  const auto op = j.find("op");
  if (op == j.end() || !op->is_string()) throw RecordError("record needs a string 'op'");
  job.op = op->get<std::string>();
  const auto params = j.find("params");
  if (params == j.end()) throw RecordError("record needs a 'params' object");
  job.params = parse_params(*params);
  if (const auto config = j.find("config"); config != j.end()) job.config = parse_config(*config);
  return job;
}

void append_params(std::string& s, const JobRecord& job) {
  s += "\"op\":" + quote(job.op) + ",\"params\":{";
  bool first = true;
  for (const auto& [key, value] : job.params) {
    if (!first) s += ',';
    first = false;
    s += quote(key) + ':' + format_number(value);
  }
  s += '}';
  if (job.config.empty()) return;
  s += ",\"config\":{";
  first = true;
  auto field = [&](std::string_view key, const std::string& value) {
    if (!first) s += ',';
    first = false;
    s += '"';
    s += key;
    s += "\":" + value;
  };
  const JobConfig& c = job.config;
  if (c.rel_tol) field("rel_tol", format_number(*c.rel_tol));
  if (c.abs_tol) field("abs_tol", format_number(*c.abs_tol));
  if (c.max_depth) field("max_depth", std::to_string(*c.max_depth));
  if (c.samples) field("samples", std::to_string(*c.samples));
  if (c.seed) field("seed", std::to_string(*c.seed));
  s += '}';
}

}  // namespace

std::optional<Op> parse_op(std::string_view name) noexcept {
  for (const auto& info : kOps) {
    if (info.name == name) return info.op;
  }
  return std::nullopt;
}

std::string_view op_name(Op op) noexcept { return kOps[static_cast<std::size_t>(op)].name; }

std::span<const std::string_view> op_parameters(Op op) noexcept {
  return kOps[static_cast<std::size_t>(op)].params;
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

JobRecord parse_job(std::string_view line) { return parse_job_object(parse_object(line)); }

std::string format_job(const JobRecord& job) {
  std::string s = "{";
  append_params(s, job);
  s += '}';
  return s;
}

std::string format_result(const ResultRecord& r) {
  std::string s = "{";
  if (r.job) {
    append_params(s, *r.job);
    s += ',';
  } else {
    s += "\"input\":" + quote(r.input) + ',';
  }
  if (!r.ok) {
    s += "\"status\":\"error\",\"message\":" + quote(r.message) + '}';
    return s;
  }
  s += "\"status\":\"ok\",\"value\":" + format_number(r.value);
  const Diagnostics& d = r.diagnostics;
  if (!d.empty()) {
    s += ",\"diagnostics\":{";
    bool first = true;
    auto field = [&](std::string_view key, const std::string& value) {
      if (!first) s += ',';
      first = false;
      s += '"';
      s += key;
      s += "\":" + value;
    };
    if (d.error_estimate) field("error_estimate", format_number(*d.error_estimate));
    if (d.evaluations) field("evaluations", std::to_string(*d.evaluations));
    if (d.standard_error) field("standard_error", format_number(*d.standard_error));
    if (d.converged) field("converged", *d.converged ? "true" : "false");
    s += '}';
  }
  s += '}';
  return s;
}

ResultRecord parse_result(std::string_view line) {
  const Json j = parse_object(line);
  ResultRecord r;
  if (const auto input = j.find("input"); input != j.end()) {
    if (!input->is_string()) throw RecordError("'input' must be a string");
    r.input = input->get<std::string>();
  } else {
    r.job = parse_job_object(j);
  }
  const auto status = j.find("status");
  if (status == j.end() || !status->is_string()) throw RecordError("result needs a 'status'");
  if (*status == "error") {
    const auto message = j.find("message");
    if (message == j.end() || !message->is_string()) throw RecordError("error needs a 'message'");
    r.message = message->get<std::string>();
    return r;
  }
  if (*status != "ok") throw RecordError("unknown status");
  if (!r.job) throw RecordError("ok result needs an op");
  r.ok = true;
  const auto value = j.find("value");
  if (value == j.end()) throw RecordError("ok result needs a 'value'");
  r.value = as_double(*value, "value");
  if (const auto diag = j.find("diagnostics"); diag != j.end()) {
    if (!diag->is_object()) throw RecordError("'diagnostics' must be an object");
    for (const auto& [key, v] : diag->items()) {
      if (key == "error_estimate") {
        r.diagnostics.error_estimate = as_double(v, key);
      } else if (key == "evaluations") {
        r.diagnostics.evaluations = as_int(v, key);
      } else if (key == "standard_error") {
        r.diagnostics.standard_error = as_double(v, key);
      } else if (key == "converged") {
        if (!v.is_boolean()) throw RecordError("'converged' must be a boolean");
        r.diagnostics.converged = v.get<bool>();
      } else {
        throw RecordError("unknown diagnostics key '" + key + "'");
      }
    }
  }
  return r;
}

}  // namespace cauchykl::cli
