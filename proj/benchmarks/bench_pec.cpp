// Copyright 2026 The blockpec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <blockpec/blockpec.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace blockpec;

namespace {

Circuit random_block(int n, int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const GateKind kinds[] = {GateKind::CNOT, GateKind::CZ, GateKind::RZZ, GateKind::RZ, GateKind::X};
  std::uniform_int_distribution<int> kind(0, 4), qubit(0, n - 1);
  Circuit c(n, NoiseSpec::uncorrelated(0.01));
  while (static_cast<int>(c.size()) < d) {
    const GateKind k = kinds[kind(rng)];
    const int a = qubit(rng), b = qubit(rng);
    if (arity(k) == 2 && a == b) continue;
    std::vector<int> qubits = arity(k) == 2 ? std::vector<int>{a, b} : std::vector<int>{a};
    c.add(GateOp::make(k, qubits, is_parameterized(k) ? 0.3 : 0.0));
  }
  return c;
}

void BM_BlockCoefficients(benchmark::State& state) {
  const Circuit c = random_block(6, static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(block_coefficients(c));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BlockCoefficients)->Arg(4)->Arg(8)->Arg(16)->Arg(32)->Complexity(benchmark::oN);

void BM_NaiveBlockCoefficients(benchmark::State& state) {
  const Circuit c = random_block(2, static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(naive_block_coefficients(c));
}
BENCHMARK(BM_NaiveBlockCoefficients)->DenseRange(2, 8, 2);

void BM_ExactHybrid(benchmark::State& state) {
  const Circuit c = gen_rbs_pyramid(static_cast<int>(state.range(0)), std::uint64_t{3}, NoiseSpec::uncorrelated(0.01));
  const auto obs = Observable::z_on(c.num_qubits(), 0);
  for (auto _ : state) benchmark::DoNotOptimize(exact_mitigated_expectation(c, obs, Mode::hybrid));
}
BENCHMARK(BM_ExactHybrid)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_PecEstimate(benchmark::State& state) {
  const Circuit c = gen_swap_network(4, 1.0, Interaction::rzz, 2, NoiseSpec::uncorrelated(0.01));
  const auto obs = Observable::z_on(4, 0);
  for (auto _ : state) benchmark::DoNotOptimize(pec_estimate(c, obs, {Mode::hybrid, 1000, 5}));
}
BENCHMARK(BM_PecEstimate)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
