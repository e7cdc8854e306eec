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

#include <algorithm>
#include <iostream>
#include <map>
#include <thread>

#include "CLI11.hpp"
#include "cauchykl/cli/commands.hpp"
#include "cauchykl/errors.hpp"

namespace cauchykl::cli {
namespace {

struct QuadratureFlags {
  bool numeric = false;
  std::optional<double> rel_tol;
  std::optional<double> abs_tol;
  std::optional<int> max_depth;

  void attach(CLI::App* cmd) {
    cmd->add_flag("--numeric", numeric, "Evaluate by adaptive quadrature instead of the closed form");
    cmd->add_option("--rel-tol", rel_tol, "Quadrature relative tolerance (with --numeric)");
    cmd->add_option("--abs-tol", abs_tol, "Quadrature absolute tolerance (with --numeric)");
    cmd->add_option("--max-depth", max_depth, "Quadrature refinement depth (with --numeric)");
  }
  void apply(JobRecord& job) const {
    if (!numeric) {
      if (rel_tol || abs_tol || max_depth) {
        throw CLI::ValidationError("--rel-tol, --abs-tol and --max-depth need --numeric");
      }
      return;
    }
    job.op += "-numeric";
    job.config.rel_tol = rel_tol;
    job.config.abs_tol = abs_tol;
    job.config.max_depth = max_depth;
  }
};

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

int emit_single(const JobRecord& job, std::ostream& out, std::ostream& err) {
  const ResultRecord r = run_job(job);
  (r.ok ? out : err) << format_result(r) << '\n';
  return r.ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Closed-form divergences between Cauchy distributions, with numerical and exact checks",
               "cauchykl"};
  app.require_subcommand(1);

  // Values for the single-job commands, keyed by flag name.
  std::map<std::string, double> values;
  auto numbers = [&](CLI::App* cmd, std::initializer_list<const char*> names) {
    for (const char* name : names) {
      cmd->add_option(std::string("--") + name, values[name])->required();
    }
  };

  QuadratureFlags kl_quad, ce_quad, a_quad;
  auto* kl = app.add_subcommand("kl", "KL divergence between (l1, s1) and (l2, s2)");
  numbers(kl, {"l1", "s1", "l2", "s2"});
  kl_quad.attach(kl);
  auto* ce = app.add_subcommand("cross-entropy", "Cross-entropy of (l2, s2) relative to (l1, s1)");
  numbers(ce, {"l1", "s1", "l2", "s2"});
  ce_quad.attach(ce);
  auto* entropy = app.add_subcommand("entropy", "Differential entropy of (l, s)");
  numbers(entropy, {"l", "s"});
  auto* ia = app.add_subcommand("integral-a",
                                "Integral of log(dx^2+ex+f) / (ax^2+bx+c) over the real line");
  numbers(ia, {"a", "b", "c", "d", "e", "f"});
  a_quad.attach(ia);
  auto* prud = app.add_subcommand("prudnikov",
                                  "Integral of log(a^2 - 2abx + x^2) / (x^2 + z^2) over the real line");
  numbers(prud, {"a", "b", "z"});
  std::int64_t mc_samples = 100000;
  std::uint64_t mc_seed = 1;
  auto* mc = app.add_subcommand("mc", "Monte-Carlo estimate of the KL divergence");
  numbers(mc, {"l1", "s1", "l2", "s2"});
  mc->add_option("--samples", mc_samples, "Number of samples")->capture_default_str();
  mc->add_option("--seed", mc_seed, "Generator seed")->capture_default_str();

  unsigned batch_threads = 1;
  auto* batch = app.add_subcommand("batch", "Evaluate newline-delimited JSON jobs from stdin");
  batch->add_option("--threads", batch_threads, "Worker threads, 0 for all cores")
      ->capture_default_str();

  VerifyOptions verify_options;
  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("--suite", suite, "Suite to run")
      ->check(CLI::IsMember({"closed-vs-quadrature", "certificate", "ode", "monte-carlo", "all"}))
      ->capture_default_str();
  verify->add_option("--count", verify_options.count, "Points per check")->capture_default_str();
  verify->add_option("--seed", verify_options.seed, "Seed for the sampled points")
      ->capture_default_str();
  verify->add_option("--samples", verify_options.samples, "Samples per monte-carlo point")
      ->capture_default_str();
  verify->add_option("--threads", verify_options.threads, "Worker threads, 0 for all cores")
      ->capture_default_str();

  auto job_for = [&](std::string op, std::initializer_list<const char*> names) {
    JobRecord job;
    job.op = std::move(op);
    for (const char* name : names) job.params.emplace_back(name, values.at(name));
    return job;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (kl->parsed() || ce->parsed()) {
      JobRecord job = job_for(kl->parsed() ? "kl" : "cross-entropy", {"l1", "s1", "l2", "s2"});
      (kl->parsed() ? kl_quad : ce_quad).apply(job);
      return emit_single(job, out, err);
    }
    if (entropy->parsed()) return emit_single(job_for("entropy", {"l", "s"}), out, err);
    if (ia->parsed()) {
      JobRecord job = job_for("integral-a", {"a", "b", "c", "d", "e", "f"});
      a_quad.apply(job);
      return emit_single(job, out, err);
    }
    if (prud->parsed()) return emit_single(job_for("prudnikov", {"a", "b", "z"}), out, err);
    if (mc->parsed()) {
      JobRecord job = job_for("mc", {"l1", "s1", "l2", "s2"});
      job.config.samples = mc_samples;
      job.config.seed = mc_seed;
      return emit_single(job, out, err);
    }
    if (batch->parsed()) return run_batch(in, out, resolve_threads(batch_threads)) == 0 ? 0 : 1;
    static const std::map<std::string, Suite> kSuites{
        {"closed-vs-quadrature", Suite::closed_vs_quadrature},
        {"certificate", Suite::certificate},
        {"ode", Suite::ode},
        {"monte-carlo", Suite::monte_carlo},
        {"all", Suite::all}};
    verify_options.suite = kSuites.at(suite);
    verify_options.threads = resolve_threads(verify_options.threads);
    return run_verify(verify_options, out) == 0 ? 0 : 1;
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace cauchykl::cli
