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

#include "tamewild/wildness.hpp"

namespace {

using tamewild::NcPoly;
using tamewild::PrimeField;

NcPoly commutator(PrimeField f) {
  const NcPoly x1 = NcPoly::variable(2, 0, f);
  const NcPoly x2 = NcPoly::variable(2, 1, f);
  return x1 * x2 - x2 * x1;
}

void BM_NcEval(benchmark::State& state) {
  const PrimeField f(7);
  const auto n = static_cast<std::size_t>(state.range(0));
  NcPoly g = commutator(f);
  g = g * g;
  const tamewild::MatrixTuple t({tamewild::Matrix::identity(n, f) * f(3), tamewild::Matrix::unit(n, 0, n - 1, f)});
  for (auto _ : state) benchmark::DoNotOptimize(tamewild::nc_eval(g, t));
}
BENCHMARK(BM_NcEval)->RangeMultiplier(2)->Range(2, 32);

void BM_FalsifyScalarStage(benchmark::State& state) {
  const PrimeField f(static_cast<std::uint32_t>(state.range(0)));
  const tamewild::Transform t(2, {NcPoly::variable(2, 0, f) + NcPoly::variable(2, 1, f)});
  for (auto _ : state) benchmark::DoNotOptimize(tamewild::falsify_containment(t, 2, f).outcome);
}
BENCHMARK(BM_FalsifyScalarStage)->Arg(5)->Arg(101);

void BM_FalsifyExhaustiveStage(benchmark::State& state) {
  const PrimeField f(2);
  const tamewild::Transform t(2, {commutator(f)});
  for (auto _ : state) benchmark::DoNotOptimize(tamewild::falsify_containment(t, 2, f).outcome);
}
BENCHMARK(BM_FalsifyExhaustiveStage)->Unit(benchmark::kMillisecond);

}  // namespace
