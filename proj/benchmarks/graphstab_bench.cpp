// Copyright 2026 The graphstab Authors. All Rights Reserved.
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

#include <random>

#include "graphstab/code_sim.hpp"
#include "graphstab/convert.hpp"
#include "graphstab/sampling.hpp"

namespace graphstab {
namespace {

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> digit(0, f.p() - 1);
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, digit(rng));
  }
  return m;
}

void BM_Rref(benchmark::State& state) {
  const Field f(static_cast<std::uint32_t>(state.range(1)));
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  const Matrix m = random_matrix(f, n, 2 * n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->ArgsProduct({{8, 32, 128}, {2, 3}});

void BM_DistanceAlgebraic(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(2);
  const auto s = random_isotropic(Field(2), n, n / 2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(distance_algebraic(s));
}
BENCHMARK(BM_DistanceAlgebraic)->DenseRange(4, 10, 2);

void BM_StabilizerToGraph(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  const auto s = random_isotropic(Field(3), n, n / 2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(stabilizer_to_graph(s));
}
BENCHMARK(BM_StabilizerToGraph)->RangeMultiplier(2)->Range(4, 32);

void BM_EncodeIsometry(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(4);
  const auto g = random_graph_code(Field(2), 1, 0, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(encode_isometry(g));
}
BENCHMARK(BM_EncodeIsometry)->DenseRange(4, 8, 2);

}  // namespace
}  // namespace graphstab

BENCHMARK_MAIN();
