// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <random>

#include "lisscheb/lisscheb.hpp"

using namespace lisscheb;

namespace {

SampleVector random_samples(const NodeSpec& spec) {
  const auto nodes = build_node_set(spec);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(nodes->size());
  for (auto& x : v) x = dist(rng);
  return SampleVector(nodes, std::move(v));
}

// n = (2^k + 1, 2^k): P roughly quadruples per step
void BM_CoefficientsFast2D(benchmark::State& state) {
  const Index k = state.range(0);
  const auto spec = NodeSpec::standard({(Index{1} << k) + 1, Index{1} << k});
  const auto h = random_samples(spec);
  const auto gamma = build_gamma(spec);
  for (auto _ : state) benchmark::DoNotOptimize(coefficients_fast(h, gamma));
  state.counters["P"] = static_cast<double>(spec.n().product());
  state.SetComplexityN(spec.n().product());
}
BENCHMARK(BM_CoefficientsFast2D)->DenseRange(4, 9)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oNLogN);

void BM_CoefficientsNaive2D(benchmark::State& state) {
  const Index k = state.range(0);
  const auto spec = NodeSpec::standard({(Index{1} << k) + 1, Index{1} << k});
  const auto h = random_samples(spec);
  const auto gamma = build_gamma(spec);
  for (auto _ : state) benchmark::DoNotOptimize(coefficients_naive(h, gamma));
  state.counters["P"] = static_cast<double>(spec.n().product());
}
BENCHMARK(BM_CoefficientsNaive2D)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_CoefficientsFast3D(benchmark::State& state) {
  const auto spec = NodeSpec::standard({31, 17, 16});
  const auto h = random_samples(spec);
  for (auto _ : state) benchmark::DoNotOptimize(coefficients_fast(h));
}
BENCHMARK(BM_CoefficientsFast3D)->Unit(benchmark::kMillisecond);

void BM_ExpansionEval(benchmark::State& state) {
  const auto spec = NodeSpec::standard({65, 64});
  const auto p = interpolate(random_samples(spec));
  std::vector<double> pts(2 * 1024);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (auto& x : pts) x = dist(rng);
  for (auto _ : state) benchmark::DoNotOptimize(expansion_eval_many(p, pts));
}
BENCHMARK(BM_ExpansionEval)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
