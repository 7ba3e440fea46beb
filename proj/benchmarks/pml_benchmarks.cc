// Copyright 2026 The PML Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "benchmark/benchmark.h"
#include "pml/correlated_binary.h"
#include "pml/leakage.h"
#include "pml/mechanisms.h"
#include "pml/oracle.h"
#include "pml/random.h"

namespace pml {
namespace {

void BM_CondDensityClosedForm(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  CorrelatedBinaryModel m = *CorrelatedBinaryModel::Create(n, 0.25, 0.5);
  const double b = CalibratedScale(n, 0.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(CondDensityClosedForm(m, b, 0, -0.5));
  }
}
BENCHMARK(BM_CondDensityClosedForm)->RangeMultiplier(10)->Range(10, 1000000);

void BM_CondDensityBinomial(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  CorrelatedBinaryModel m = *CorrelatedBinaryModel::Create(n, 0.25, 0.5);
  const double b = CalibratedScale(n, 0.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(CondDensityBinomial(m, b, 0, -0.5));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_CondDensityBinomial)
    ->RangeMultiplier(4)
    ->Range(16, 16384)
    ->Complexity(benchmark::oN);

void BM_EnumeratedPml(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  CorrelatedBinaryModel m = *CorrelatedBinaryModel::Create(n, 0.25, 0.5);
  ExplicitJointModel joint = *EnumerateJoint(m);
  QueryLaplaceMechanism q = *CalibratedMechanism(m, 0.1);
  LaplaceMechanism explicit_m = *q.Materialize(m.alphabet());
  for (auto _ : state) {
    benchmark::DoNotOptimize(PmlEntry(joint, explicit_m, 0, -0.5));
  }
  state.SetComplexityN(std::int64_t{1} << (n + 1));
}
BENCHMARK(BM_EnumeratedPml)->DenseRange(4, 14, 2)->Complexity(benchmark::oN);

void BM_LowerBound(benchmark::State& state) {
  std::int64_t n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(LowerBound(n, 0.25, 0.5, 0.1));
    n = n % 1000000 + 1;
  }
}
BENCHMARK(BM_LowerBound);

void BM_ThresholdSearch(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        FindThresholdByDoubling(0.25, EtaSchedule::Constant(0.5), 0.1, 1e-6));
  }
}
BENCHMARK(BM_ThresholdSearch);

void BM_PmlFiniteProfile(benchmark::State& state) {
  const std::size_t k = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  std::vector<Label> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back(std::to_string(i));
  std::vector<std::vector<double>> rows;
  for (std::size_t x = 0; x < k; ++x) rows.push_back(rng.SimplexPoint(k));
  FiniteMechanism m = *FiniteMechanism::Create(labels, labels, rows);
  FiniteDistribution prior =
      *FiniteDistribution::FromProbabilities(labels, rng.SimplexPoint(k));
  for (auto _ : state) {
    benchmark::DoNotOptimize(PmlProfile(prior, m));
  }
  state.SetComplexityN(static_cast<std::int64_t>(k));
}
BENCHMARK(BM_PmlFiniteProfile)
    ->RangeMultiplier(2)
    ->Range(2, 256)
    ->Complexity(benchmark::oNSquared);

void BM_OracleTrials(benchmark::State& state) {
  OracleTrialConfig config;
  config.achievability_trials = 100;
  config.gain_trials = 1000;
  config.kernel_trials = 1000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(RunOracleTrials(config, {}));
  }
}
BENCHMARK(BM_OracleTrials)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace pml

BENCHMARK_MAIN();
