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
#include <functional>
#include <ostream>

#include "cauchykl/cauchy.hpp"
#include "cauchykl/certificate.hpp"
#include "cauchykl/cli/commands.hpp"
#include "cauchykl/errors.hpp"
#include "cauchykl/quad.hpp"
#include "cauchykl/random.hpp"
#include "cauchykl/rational.hpp"
#include "json.hpp"
#include "parallel.hpp"

namespace cauchykl::cli {
namespace {

using Certificate = cert::TelescopingCertificate;

constexpr double kOracleTolerance = 1e-8;
constexpr double kPsiLimitTolerance = 1e-5;
constexpr double kPsiLimitAbscissa = 1e8;
constexpr double kMonteCarloBand = 4.0;

// Flat JSON object writer with insertion-ordered keys.
class Line {
 public:
  Line& raw(std::string_view key, const std::string& value) {
    s_ += first_ ? "" : ",";
    first_ = false;
    s_ += '"';
    s_ += key;
    s_ += "\":" + value;
    return *this;
  }
  Line& str(std::string_view key, std::string_view value) {
    return raw(key, nlohmann::json(std::string(value))
                        .dump(-1, ' ', false, nlohmann::json::error_handler_t::replace));
  }
  Line& num(std::string_view key, double value) { return raw(key, format_number(value)); }
  Line& count(std::string_view key, std::size_t value) { return raw(key, std::to_string(value)); }
  [[nodiscard]] std::string done() const { return s_ + "}"; }

 private:
  std::string s_ = "{";
  bool first_ = true;
};

struct Outcome {
  bool pass = false;
  double residual = 0.0;
  std::string message;
};

struct Point {
  std::string params;  // JSON object text, echoed on failure
  std::function<Outcome()> run;
};

struct Check {
  std::string_view suite;
  std::string_view name;
  double tolerance;
  std::vector<Point> points;
  // Points that must pass for the check to pass; defaults to all of them.
  std::optional<std::size_t> required;
};

std::string rational_params(std::initializer_list<std::pair<std::string_view, Rational>> values) {
  Line line;
  for (const auto& [k, v] : values) line.str(k, to_string(v));
  return line.done();
}

std::string real_params(std::initializer_list<std::pair<std::string_view, double>> values) {
  Line line;
  for (const auto& [k, v] : values) line.num(k, v);
  return line.done();
}

Rational random_rational(Rng& rng) {
  return make_rational(rng.integer(-1000, 1000), rng.integer(1, 1000));
}
Rational random_positive_rational(Rng& rng) {
  return make_rational(rng.integer(1, 1000), rng.integer(1, 1000));
}

CauchyDist random_dist(Rng& rng, double l_max, double s_min, double s_max) {
  return {rng.uniform(-l_max, l_max), rng.log_uniform(s_min, s_max)};
}

std::string pair_params(const CauchyDist& p1, const CauchyDist& p2) {
  return real_params({{"l1", p1.location()}, {"s1", p1.scale()}, {"l2", p2.location()},
                      {"s2", p2.scale()}});
}

Outcome exact_zero(const Rational& residual) {
  return {residual == 0, std::abs(to_double(residual)), {}};
}

std::vector<Check> closed_vs_quadrature(std::int64_t count, Rng& rng) {
  Check kl{"closed-vs-quadrature", "kl", kOracleTolerance, {}, {}};
  Check ce{"closed-vs-quadrature", "cross-entropy", kOracleTolerance, {}, {}};
  for (std::int64_t i = 0; i < count; ++i) {
    const CauchyDist p1 = random_dist(rng, 100.0, 0.01, 100.0);
    const CauchyDist p2 = random_dist(rng, 100.0, 0.01, 100.0);
    auto compare = [](double closed, const quad::QuadratureResult& q) {
      const double dev = std::abs(closed - q.value) / (1.0 + std::abs(closed));
      if (!q.converged) return Outcome{false, dev, "quadrature did not converge"};
      return Outcome{dev <= kOracleTolerance, dev, {}};
    };
    kl.points.push_back({pair_params(p1, p2), [=] {
                           return compare(kl_closed(p1, p2), quad::kl_numeric(p1, p2));
                         }});
    ce.points.push_back({pair_params(p1, p2), [=] {
                           return compare(cross_entropy_closed(p1, p2),
                                          quad::cross_entropy_numeric(p1, p2));
                         }});
  }
  return {std::move(kl), std::move(ce)};
}

std::vector<Check> certificate_suite(std::int64_t count, Rng& rng) {
  Check telescoping{"certificate", "telescoping", 0.0, {}, {}};
  while (static_cast<std::int64_t>(telescoping.points.size()) < count) {
    const Rational d = random_positive_rational(rng), f = random_positive_rational(rng);
    const Rational e = random_rational(rng);
    if (!(4 * d * f - e * e > 0)) continue;
    const Rational x = random_rational(rng);
    telescoping.points.push_back({rational_params({{"d", d}, {"e", e}, {"f", f}, {"x", x}}), [=] {
                                    return exact_zero(cert::verify_telescoping(d, e, f, x));
                                  }});
  }

  Check limit{"certificate", "psi-limit", kPsiLimitTolerance, {}, {}};
  for (std::int64_t i = 0; i < count; ++i) {
    // The limit is proportional to e; |e| stays away from 0 so the comparison is relative.
    const double d = rng.uniform(0.5, 4.0), f = rng.uniform(0.5, 4.0);
    const double sign = rng.uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0;
    const double e = sign * rng.uniform(0.1, 0.95) * 2.0 * std::sqrt(d * f);
    limit.points.push_back({real_params({{"d", d}, {"e", e}, {"f", f}}), [=] {
                              const double l =
                                  to_double(cert::psi_limit(Rational(d), Rational(e), Rational(f)));
                              double worst = 0.0;
                              for (const double x : {kPsiLimitAbscissa, -kPsiLimitAbscissa}) {
                                worst = std::max(worst, std::abs(Certificate::psi(d, e, f, x) - l) /
                                                            std::abs(l));
                              }
                              return Outcome{worst <= kPsiLimitTolerance, worst, {}};
                            }});
  }

  Check k_zero{"certificate", "k-zero", cert::kKZeroTolerance, {}, {}};
  for (const auto& c : cert::verify_K_zero().cases) {
    k_zero.points.push_back({real_params({{"d", c.d}, {"e", c.e}, {"f", c.d}}), [c] {
                               if (!c.converged) {
                                 return Outcome{false, c.deviation, "quadrature did not converge"};
                               }
                               return Outcome{c.deviation <= cert::kKZeroTolerance, c.deviation, {}};
                             }});
  }

  Check g{"certificate", "g-factorization", cert::kGProductTolerance, {}, {}};
  for (std::int64_t i = 0; i < count; ++i) {
    const double d = rng.log_uniform(0.1, 10.0), f = rng.log_uniform(0.1, 10.0);
    const double e = rng.uniform(-0.999, 0.999) * 2.0 * std::sqrt(d * f);
    g.points.push_back({real_params({{"d", d}, {"e", e}, {"f", f}}), [=] {
                          const auto r = cert::verify_G_factorization(d, e, f);
                          return Outcome{r.passed(), r.relative_product_error,
                                         r.positivity_ok || !r.positivity_checked
                                             ? std::string{}
                                             : std::string{"G1 or G2 not positive"}};
                        }});
  }
  return {std::move(telescoping), std::move(limit), std::move(k_zero), std::move(g)};
}

std::vector<Check> ode_suite(std::int64_t count, Rng& rng) {
  Check ode{"ode", "ode-dAdd", 0.0, {}, {}};
  while (static_cast<std::int64_t>(ode.points.size()) < count) {
    const Rational d = random_positive_rational(rng), e = random_rational(rng);
    const Rational m = random_positive_rational(rng);
    const Rational f = cert::square_discriminant_f(d, e, m);
    if (e == 0 && d == f) continue;
    ode.points.push_back({rational_params({{"d", d}, {"e", e}, {"f", f}}),
                          [=] { return exact_zero(cert::verify_ode_dAdd(d, e, f)); }});
  }
  return {std::move(ode)};
}

std::vector<Check> monte_carlo_suite(std::int64_t count, std::int64_t samples, Rng& rng) {
  Check mc{"monte-carlo", "kl-within-4se", kMonteCarloBand, {}, {}};
  for (std::int64_t i = 0; i < count; ++i) {
    const CauchyDist p1 = random_dist(rng, 10.0, 0.1, 10.0);
    const CauchyDist p2 = random_dist(rng, 10.0, 0.1, 10.0);
    const std::uint64_t seed = rng.next_u64();
    mc.points.push_back({pair_params(p1, p2), [=] {
                           const auto m = quad::kl_monte_carlo(p1, p2, samples, seed);
                           const double z = std::abs(m.estimate - kl_closed(p1, p2)) / m.standard_error;
                           return Outcome{z <= kMonteCarloBand, z, {}};
                         }});
  }
  mc.required = static_cast<std::size_t>(std::ceil(kMonteCarloPassFraction * count));
  return {std::move(mc)};
}

// Evaluates every point, then prints failures and the summary. Returns true if the check passed.
bool run_check(const Check& check, unsigned threads, std::ostream& out) {
  std::vector<Outcome> outcomes(check.points.size());
  detail::parallel_for(check.points.size(), threads, [&](std::size_t i) {
    try {
      outcomes[i] = check.points[i].run();
    } catch (const std::exception& e) {
      outcomes[i] = {false, std::nan(""), e.what()};
    }
  });
  std::size_t passed = 0;
  double worst = 0.0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const Outcome& o = outcomes[i];
    if (o.pass) ++passed;
    if (std::isfinite(o.residual)) worst = std::max(worst, o.residual);
    if (o.pass) continue;
    Line line;
    line.str("suite", check.suite).str("check", check.name).count("point", i);
    line.raw("params", check.points[i].params).str("status", "fail");
    line.num("residual", o.residual);
    if (!o.message.empty()) line.str("message", o.message);
    out << line.done() << '\n';
  }
  const bool ok = passed >= check.required.value_or(check.points.size());
  Line summary;
  summary.str("suite", check.suite).str("check", check.name);
  summary.count("points", check.points.size()).count("passed", passed);
  summary.count("failed", check.points.size() - passed);
  if (check.required) summary.count("required", *check.required);
  summary.num("worst", worst).num("tolerance", check.tolerance).str("status", ok ? "pass" : "fail");
  out << summary.done() << '\n';
  out.flush();
  return ok;
}

}  // namespace

std::size_t run_verify(const VerifyOptions& options, std::ostream& out) {
  if (options.count < 1) throw PreconditionError("count must be ≥ 1");
  if (options.samples < 2) throw PreconditionError("samples must be ≥ 2");
  const bool all = options.suite == Suite::all;
  // Each suite draws from its own generator so that selecting one suite
  // reproduces the points it gets under "all".
  std::vector<Check> checks;
  auto append = [&](std::vector<Check> more) {
    for (auto& c : more) checks.push_back(std::move(c));
  };
  if (all || options.suite == Suite::closed_vs_quadrature) {
    Rng rng(options.seed);
    append(closed_vs_quadrature(options.count, rng));
  }
  if (all || options.suite == Suite::certificate) {
    Rng rng(options.seed ^ 0x9e3779b97f4a7c15ull);
    append(certificate_suite(options.count, rng));
  }
  if (all || options.suite == Suite::ode) {
    Rng rng(options.seed ^ 0xbf58476d1ce4e5b9ull);
    append(ode_suite(options.count, rng));
  }
  if (all || options.suite == Suite::monte_carlo) {
    Rng rng(options.seed ^ 0x94d049bb133111ebull);
    append(monte_carlo_suite(options.count, options.samples, rng));
  }
  std::size_t failed = 0;
  for (const Check& c : checks) failed += run_check(c, options.threads, out) ? 0 : 1;
  return failed;
}

}  // namespace cauchykl::cli
