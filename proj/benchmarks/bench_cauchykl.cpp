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

#include <benchmark/benchmark.h>

#include <vector>

#include "cauchykl/cauchy.hpp"
#include "cauchykl/certificate.hpp"
#include "cauchykl/integral.hpp"
#include "cauchykl/quad.hpp"
#include "cauchykl/random.hpp"

namespace {

using namespace cauchykl;

std::vector<std::pair<CauchyDist, CauchyDist>> sample_pairs(std::size_t n) {
  Rng rng(7);
  std::vector<std::pair<CauchyDist, CauchyDist>> out;
  for (std::size_t i = 0; i < n; ++i) {
    const CauchyDist p1(rng.uniform(-100, 100), rng.log_uniform(0.01, 100));
    const CauchyDist p2(rng.uniform(-100, 100), rng.log_uniform(0.01, 100));
    out.emplace_back(p1, p2);
  }
  return out;
}

void BM_KlClosed(benchmark::State& state) {
  const auto pairs = sample_pairs(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [p1, p2] = pairs[i++ & 1023];
    benchmark::DoNotOptimize(kl_closed(p1, p2));
  }
}
BENCHMARK(BM_KlClosed);

void BM_CrossEntropyClosed(benchmark::State& state) {
  const auto pairs = sample_pairs(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [p1, p2] = pairs[i++ & 1023];
    benchmark::DoNotOptimize(cross_entropy_closed(p1, p2));
  }
}
BENCHMARK(BM_CrossEntropyClosed);

void BM_IntegralAGeneral(benchmark::State& state) {
  const PositiveQuadratic q1(2, 1, 3), q2(1, -1, 5);
  for (auto _ : state) benchmark::DoNotOptimize(integral_A_general(q1, q2));
}
BENCHMARK(BM_IntegralAGeneral);

void BM_KlNumeric(benchmark::State& state) {
  const auto pairs = sample_pairs(64);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [p1, p2] = pairs[i++ & 63];
    benchmark::DoNotOptimize(quad::kl_numeric(p1, p2));
  }
}
BENCHMARK(BM_KlNumeric);

void BM_IntegralANumeric(benchmark::State& state) {
  const PositiveQuadratic q1(2, 1, 3), q2(1, -1, 5);
  for (auto _ : state) benchmark::DoNotOptimize(quad::integral_A_numeric(q1, q2));
}
BENCHMARK(BM_IntegralANumeric);

void BM_KlMonteCarlo(benchmark::State& state) {
  const CauchyDist p1(0, 1), p2(1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(quad::kl_monte_carlo(p1, p2, state.range(0), 42));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_KlMonteCarlo)->Arg(10000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_VerifyTelescoping(benchmark::State& state) {
  const Rational d = make_rational(3, 2), e = make_rational(1, 2), f = make_rational(5);
  const Rational x = make_rational(-7, 4);
  for (auto _ : state) benchmark::DoNotOptimize(cert::verify_telescoping(d, e, f, x));
}
BENCHMARK(BM_VerifyTelescoping)->Unit(benchmark::kMicrosecond);

void BM_VerifyOde(benchmark::State& state) {
  const Rational d = make_rational(2), e = make_rational(1), f = make_rational(17, 8);
  for (auto _ : state) benchmark::DoNotOptimize(cert::verify_ode_dAdd(d, e, f));
}
BENCHMARK(BM_VerifyOde)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
