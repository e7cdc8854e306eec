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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include "cauchykl/cauchy.hpp"
#include "cauchykl/cli/commands.hpp"
#include "cauchykl/cli/records.hpp"
#include "cauchykl/errors.hpp"
#include "cauchykl/random.hpp"

namespace cauchykl::cli {
namespace {

JobRecord kl_job(double l1, double s1, double l2, double s2) {
  return {"kl", {{"l1", l1}, {"s1", s1}, {"l2", l2}, {"s2", s2}}, {}};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

struct CliRun {
  int status;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int status = run_cli(args, in, out, err);
  return {status, out.str(), err.str()};
}

TEST(Records, FormatNumberRoundTrips) {
  EXPECT_EQ(format_number(0.0), "0");
  EXPECT_EQ(format_number(1.0), "1");
  EXPECT_EQ(format_number(0.1), "0.10000000000000001");
  Rng rng(61);
  for (int i = 0; i < 1000; ++i) {
    const double v = rng.uniform(-1.0, 1.0) * std::pow(10.0, rng.uniform(-300.0, 300.0));
    EXPECT_EQ(std::strtod(format_number(v).c_str(), nullptr), v);
  }
}

TEST(Records, ParseJob) {
  const JobRecord job = parse_job(
      R"({"op":"mc","params":{"s2":2,"l1":0.5},"config":{"samples":1000,"seed":9}})");
  EXPECT_EQ(job.op, "mc");
  ASSERT_EQ(job.params.size(), 2u);
  EXPECT_EQ(job.params[0].first, "s2");
  EXPECT_EQ(job.params[1].second, 0.5);
  EXPECT_EQ(job.config.samples, 1000);
  EXPECT_EQ(job.config.seed, 9u);
  EXPECT_EQ(parse_job(format_job(job)), job);
}

TEST(Records, ParseJobRejectsMalformed) {
  for (const char* bad : {"", "nope", "[]", R"({"params":{}})", R"({"op":"kl"})",
                          R"({"op":"kl","params":{"l1":"x"}})",
                          R"({"op":"kl","params":{},"config":{"bogus":1}})",
                          R"({"op":"mc","params":{},"config":{"samples":1.5}})",
                          R"({"op":"mc","params":{},"config":{"seed":-1}})"}) {
    EXPECT_THROW((void)parse_job(bad), RecordError) << bad;
  }
}

TEST(Records, ResultRoundTrip) {
  std::vector<ResultRecord> records;
  records.push_back(run_job(kl_job(0, 1, 1, 1)));
  records.push_back(run_job({"kl-numeric", {{"l1", 0}, {"s1", 1}, {"l2", 3}, {"s2", 0.5}}, {}}));
  records.push_back(run_job({"mc", {{"l1", 0}, {"s1", 1}, {"l2", 3}, {"s2", 0.5}}, {{}, {}, {}, 500, 3}}));
  records.push_back(run_job(kl_job(0, 1, 0, 0)));
  records.push_back(process_line("not json \"quoted\"\t"));
  records.push_back(run_job({"entropy", {{"l", -1e300}, {"s", 5e-324}}, {}}));
  for (const ResultRecord& r : records) {
    const std::string text = format_result(r);
    EXPECT_EQ(parse_result(text), r) << text;
    EXPECT_EQ(format_result(parse_result(text)), text);
  }
}

TEST(Records, RandomResultsRoundTrip) {
  Rng rng(62);
  for (int i = 0; i < 300; ++i) {
    const JobRecord job{
        i % 3 == 0 ? "kl" : (i % 3 == 1 ? "cross-entropy-numeric" : "entropy"),
        {{"l1", rng.uniform(-100, 100)}, {"s1", rng.log_uniform(0.01, 100)},
         {"l2", rng.uniform(-100, 100)}, {"s2", rng.log_uniform(0.01, 100)}},
        {}};
    const ResultRecord r = run_job(job);  // entropy rejects these params: an error record
    EXPECT_EQ(parse_result(format_result(r)), r);
  }
}

TEST(RunJob, Examples) {
  const ResultRecord kl = run_job(kl_job(0, 1, 1, 1));
  ASSERT_TRUE(kl.ok);
  EXPECT_NEAR(kl.value, 0.2231435513, 1e-10);
  EXPECT_EQ(kl.value, kl_closed({0, 1}, {1, 1}));
  const ResultRecord h = run_job({"entropy", {{"l", 0}, {"s", 1}}, {}});
  ASSERT_TRUE(h.ok);
  EXPECT_DOUBLE_EQ(h.value, std::log(4 * std::numbers::pi));
  const ResultRecord bad = run_job(kl_job(0, 1, 0, 0));
  EXPECT_FALSE(bad.ok);
  EXPECT_EQ(bad.message, "scale must be positive");
  const ResultRecord a = run_job(
      {"integral-a", {{"a", 1}, {"b", 0}, {"c", 1}, {"d", 1}, {"e", 0}, {"f", 4}}, {}});
  ASSERT_TRUE(a.ok);
  EXPECT_NEAR(a.value, std::numbers::pi * std::log(9.0), 1e-14);
  const ResultRecord p = run_job({"prudnikov", {{"a", 1}, {"b", 1}, {"z", 2}}, {}});
  ASSERT_TRUE(p.ok);
  EXPECT_NEAR(p.value, std::numbers::pi / 2 * std::log(5.0), 1e-14);
}

TEST(RunJob, UnknownOperationCheckedFirst) {
  // Bogus parameters too, but the operation name is what gets reported.
  const ResultRecord r = run_job({"renyi", {{"alpha", 2}}, {}});
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.message, "unknown operation 'renyi'");
  ASSERT_TRUE(r.job.has_value());
  EXPECT_EQ(r.job->op, "renyi");
}

TEST(RunJob, ParameterAndConfigChecks) {
  EXPECT_FALSE(run_job({"kl", {{"l1", 0}, {"s1", 1}, {"l2", 0}}, {}}).ok);
  EXPECT_FALSE(run_job({"kl", {{"l1", 0}, {"s1", 1}, {"l2", 0}, {"s2", 1}, {"z", 1}}, {}}).ok);
  EXPECT_FALSE(
      run_job({"kl", {{"l1", 0}, {"s1", 1}, {"l2", 0}, {"s2", 1}}, {1e-6, {}, {}, {}, {}}}).ok);
  EXPECT_FALSE(
      run_job({"mc", {{"l1", 0}, {"s1", 1}, {"l2", 0}, {"s2", 1}}, {1e-6, {}, {}, {}, {}}}).ok);
  EXPECT_FALSE(
      run_job({"mc", {{"l1", 0}, {"s1", 1}, {"l2", 0}, {"s2", 1}}, {{}, {}, {}, 1, {}}}).ok);
  EXPECT_FALSE(
      run_job({"kl-numeric", {{"l1", 0}, {"s1", 1}, {"l2", 0}, {"s2", 1}}, {-1.0, {}, {}, {}, {}}})
          .ok);
  const ResultRecord numeric =
      run_job({"kl-numeric", {{"l1", 0}, {"s1", 1}, {"l2", 0}, {"s2", 1}}, {1e-9, {}, {}, {}, {}}});
  ASSERT_TRUE(numeric.ok);
  const JobConfig expected{1e-9, 1e-14, 20, {}, {}};
  EXPECT_EQ(numeric.job->config, expected);
  EXPECT_EQ(numeric.diagnostics.converged, true);
  ASSERT_TRUE(numeric.diagnostics.evaluations.has_value());
  EXPECT_GT(*numeric.diagnostics.evaluations, 0);
  const ResultRecord mc = run_job({"mc", {{"l1", 0}, {"s1", 1}, {"l2", 0}, {"s2", 1}}, {}});
  ASSERT_TRUE(mc.ok);
  EXPECT_EQ(mc.job->config.samples, 100000);
  EXPECT_EQ(mc.job->config.seed, 1u);
  EXPECT_EQ(mc.value, 0.0);
}

TEST(Batch, TwoKlRecords) {
  std::istringstream in(R"({"op":"kl","params":{"l1":0,"s1":1,"l2":1,"s2":1}}
{"op":"kl","params":{"l1":0,"s1":1,"l2":0,"s2":2}}
)");
  std::ostringstream out;
  EXPECT_EQ(run_batch(in, out), 0u);
  const auto lines = lines_of(out.str());
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0],
            R"({"op":"kl","params":{"l1":0,"s1":1,"l2":1,"s2":1},"status":"ok","value":0.22314355131420976})");
  const ResultRecord second = parse_result(lines[1]);
  EXPECT_TRUE(second.ok);
  EXPECT_EQ(second.value, kl_closed({0, 1}, {0, 2}));
}

TEST(Batch, ErrorsDoNotAbortTheStream) {
  std::istringstream in(R"({"op":"kl","params":{"l1":0,"s1":1,"l2":1,"s2":1}}
{"op":"renyi","params":{"l1":0,"s1":1,"l2":1,"s2":1}}

{broken
{"op":"entropy","params":{"l":0,"s":1}}
)");
  std::ostringstream out;
  EXPECT_EQ(run_batch(in, out), 2u);
  const auto lines = lines_of(out.str());
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_TRUE(parse_result(lines[0]).ok);
  const ResultRecord renyi = parse_result(lines[1]);
  EXPECT_FALSE(renyi.ok);
  EXPECT_EQ(renyi.job->op, "renyi");
  const ResultRecord broken = parse_result(lines[2]);
  EXPECT_FALSE(broken.ok);
  EXPECT_FALSE(broken.job.has_value());
  EXPECT_EQ(broken.input, "{broken");
  EXPECT_TRUE(parse_result(lines[3]).ok);
}

TEST(Batch, DeterministicAcrossRunsAndThreads) {
  std::string input;
  Rng rng(63);
  for (int i = 0; i < 300; ++i) {
    const std::string params = R"("params":{"l1":)" + format_number(rng.uniform(-5, 5)) +
                               R"(,"s1":)" + format_number(rng.log_uniform(0.1, 10)) +
                               R"(,"l2":)" + format_number(rng.uniform(-5, 5)) + R"(,"s2":)" +
                               format_number(rng.log_uniform(0.1, 10)) + "}";
    if (i % 2 == 0) {
      input += R"({"op":"kl",)" + params + "}\n";
    } else {
      input += R"({"op":"mc",)" + params + R"(,"config":{"samples":2000,"seed":)" +
               std::to_string(i) + "}}\n";
    }
  }
  auto run = [&](unsigned threads) {
    std::istringstream in(input);
    std::ostringstream out;
    EXPECT_EQ(run_batch(in, out, threads), 0u);
    return out.str();
  };
  const std::string first = run(1);
  EXPECT_EQ(lines_of(first).size(), 300u);
  EXPECT_EQ(run(1), first);
  EXPECT_EQ(run(3), first);
  EXPECT_EQ(run(8), first);
}

TEST(Verify, CountMustBePositive) {
  std::ostringstream out;
  EXPECT_THROW((void)run_verify({Suite::all, 0, 1, 1000, 1}, out), PreconditionError);
  const CliRun r = cli({"verify", "--suite", "all", "--count", "0"});
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.err.find("count must be ≥ 1"), std::string::npos);
}

TEST(Verify, SmallSuitesPass) {
  std::ostringstream out;
  EXPECT_EQ(run_verify({Suite::all, 20, 5, 20000, 2}, out), 0u);
  const auto lines = lines_of(out.str());
  EXPECT_EQ(lines.size(), 8u);  // one summary per check, no failures
  for (const auto& line : lines) EXPECT_NE(line.find(R"("status":"pass")"), std::string::npos);
}

TEST(Verify, ReportsAreDeterministic) {
  auto run = [](unsigned threads) {
    std::ostringstream out;
    (void)run_verify({Suite::closed_vs_quadrature, 30, 11, 1000, threads}, out);
    return out.str();
  };
  EXPECT_EQ(run(1), run(4));
}

TEST(Cli, SingleCommands) {
  const CliRun kl = cli({"kl", "--l1", "0", "--s1", "1", "--l2", "1", "--s2", "1"});
  EXPECT_EQ(kl.status, 0);
  EXPECT_EQ(kl.out,
            "{\"op\":\"kl\",\"params\":{\"l1\":0,\"s1\":1,\"l2\":1,\"s2\":1},\"status\":\"ok\","
            "\"value\":0.22314355131420976}\n");
  EXPECT_TRUE(kl.err.empty());

  const CliRun h = cli({"entropy", "--l", "0", "--s", "1"});
  EXPECT_EQ(h.status, 0);
  EXPECT_DOUBLE_EQ(parse_result(h.out).value, std::log(4 * std::numbers::pi));

  const CliRun bad = cli({"kl", "--l1", "0", "--s1", "1", "--l2", "0", "--s2", "0"});
  EXPECT_NE(bad.status, 0);
  EXPECT_TRUE(bad.out.empty());
  EXPECT_EQ(parse_result(bad.err).message, "scale must be positive");

  const CliRun negative = cli({"kl", "--l1", "-3", "--s1", "1", "--l2", "1", "--s2", "1", "--numeric"});
  EXPECT_EQ(negative.status, 0);
  const ResultRecord numeric = parse_result(negative.out);
  EXPECT_EQ(numeric.job->op, "kl-numeric");
  EXPECT_NEAR(numeric.value, std::log(5.0), 1e-9);

  const CliRun mc = cli({"mc", "--l1", "0", "--s1", "1", "--l2", "1", "--s2", "2", "--samples",
                         "1000", "--seed", "4"});
  EXPECT_EQ(mc.status, 0);
  EXPECT_EQ(mc.out, cli({"mc", "--l1", "0", "--s1", "1", "--l2", "1", "--s2", "2", "--samples",
                         "1000", "--seed", "4"})
                        .out);

  EXPECT_NE(cli({"kl", "--l1", "0"}).status, 0);
  EXPECT_NE(cli({"renyi"}).status, 0);
  EXPECT_NE(cli({"kl", "--l1", "0", "--s1", "1", "--l2", "1", "--s2", "1", "--rel-tol", "1e-3"})
                .status,
            0);
}

TEST(Cli, BatchAndVerifyExitStatus) {
  const std::string good = R"({"op":"kl","params":{"l1":0,"s1":1,"l2":1,"s2":1}})"
                           "\n";
  const std::string bad = R"({"op":"renyi","params":{}})"
                          "\n";
  EXPECT_EQ(cli({"batch"}, good).status, 0);
  EXPECT_NE(cli({"batch"}, good + bad + good).status, 0);
  EXPECT_EQ(lines_of(cli({"batch", "--threads", "2"}, good + bad + good).out).size(), 3u);
  EXPECT_EQ(cli({"verify", "--suite", "ode", "--count", "10"}).status, 0);
  EXPECT_NE(cli({"verify", "--suite", "renyi"}).status, 0);
}

}  // namespace
}  // namespace cauchykl::cli
