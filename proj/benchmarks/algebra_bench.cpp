// Copyright 2026 The tamewild Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "tamewild/invariants.hpp"

namespace {

using tamewild::Matrix;
using tamewild::PrimeField;

Matrix random_matrix(std::mt19937_64& rng, std::size_t n, PrimeField f) {
  std::uniform_int_distribution<std::int64_t> d(0, f.modulus() - 1);
  std::vector<tamewild::Fe> e;
  for (std::size_t k = 0; k < n * n; ++k) e.push_back(f(d(rng)));
  return Matrix(n, n, f, std::move(e));
}

void BM_InvariantFactors(benchmark::State& state) {
  const PrimeField f(5);
  std::mt19937_64 rng(1);
  const Matrix a = random_matrix(rng, static_cast<std::size_t>(state.range(0)), f);
  for (auto _ : state) benchmark::DoNotOptimize(tamewild::invariant_factors(a));
}
BENCHMARK(BM_InvariantFactors)->DenseRange(2, 8, 2);

void BM_Determinant(benchmark::State& state) {
  const PrimeField f(101);
  std::mt19937_64 rng(2);
  const Matrix a = random_matrix(rng, static_cast<std::size_t>(state.range(0)), f);
  for (auto _ : state) benchmark::DoNotOptimize(tamewild::mat_det(a));
}
BENCHMARK(BM_Determinant)->RangeMultiplier(2)->Range(4, 64);

void BM_Interpolate(benchmark::State& state) {
  const PrimeField f(101);
  std::vector<std::pair<tamewild::Fe, tamewild::Fe>> nodes;
  for (std::int64_t x = 0; x < state.range(0); ++x) nodes.emplace_back(f(x), f(x * x * x + 7));
  for (auto _ : state) benchmark::DoNotOptimize(tamewild::interpolate(nodes));
}
BENCHMARK(BM_Interpolate)->RangeMultiplier(2)->Range(4, 64);

}  // namespace
