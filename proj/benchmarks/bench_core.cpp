/* Copyright 2026 The milnor Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
 // Timings for the hot paths: word matrices, walks, lattices, closures.

#include <benchmark/benchmark.h>

#include <random>

#include "milnor/catalog.hpp"
#include "milnor/closure.hpp"
#include "milnor/engine.hpp"
#include "milnor/higher.hpp"
#include "milnor/lattice.hpp"

namespace milnor {
namespace {

GroupWord random_word(int q, int len, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> gen(1, q), sign(0, 1);
  GroupWord w;
  for (int i = 0; i < len; ++i) w = w * GroupWord::generator(gen(rng), sign(rng) ? 1 : -1);
  return w;
}

void BM_RepresentWord(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const GroupWord w = random_word(2, 40, 11);
  for (auto _ : state) benchmark::DoNotOptimize(represent_word(w, 2, size));
}
BENCHMARK(BM_RepresentWord)->DenseRange(4, 8, 2);

void BM_FirstNonvanishing(benchmark::State& state, const char* name) {
  const Diagram d = Diagram::build(catalog_lookup(name));
  for (auto _ : state) benchmark::DoNotOptimize(first_nonvanishing(d, 8));
}
BENCHMARK_CAPTURE(BM_FirstNonvanishing, whitehead, "5_1^2");
BENCHMARK_CAPTURE(BM_FirstNonvanishing, l8n10, "8_10^2");
BENCHMARK_CAPTURE(BM_FirstNonvanishing, borromean, "6_2^3");

void BM_HigherMu(benchmark::State& state, const char* name, int max_h) {
  const Diagram d = Diagram::build(catalog_lookup(name));
  for (auto _ : state) benchmark::DoNotOptimize(higher_mu(d, max_h));
}
BENCHMARK_CAPTURE(BM_HigherMu, borromean_5, "6_2^3", 5);
BENCHMARK_CAPTURE(BM_HigherMu, l6a1_5, "6_1^2", 5);
BENCHMARK_CAPTURE(BM_HigherMu, whitehead_7, "5_1^2", 7);

void BM_LatticeSpan(benchmark::State& state) {
  const std::size_t dim = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(5);
  std::uniform_int_distribution<Coeff> c(-9, 9);
  // Twice as many generators as the dimension, as for the Delta lattices;
  // a square random matrix would have a determinant past 64 bits.
  std::vector<IntVector> rows(2 * dim, IntVector(dim));
  for (auto& r : rows)
    for (auto& x : r) x = c(rng);
  for (auto _ : state) benchmark::DoNotOptimize(Lattice::span(dim, rows));
}
BENCHMARK(BM_LatticeSpan)->RangeMultiplier(2)->Range(8, 64);

void BM_NormalClosure(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const UniMatrix g = represent_word(commutator(GroupWord::generator(1), GroupWord::generator(2)), 2, size);
  for (auto _ : state) {
    NormalClosure N(2, size);
    N.insert(g);
    benchmark::DoNotOptimize(N.num_elements());
  }
}
BENCHMARK(BM_NormalClosure)->DenseRange(4, 7, 1);

}  // namespace
}  // namespace milnor

BENCHMARK_MAIN();
