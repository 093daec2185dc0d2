// Copyright 2026 The npl Authors
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

// Microbenchmarks for the hot paths: determinant circuits, expansion, rank
// and randomized identity testing.

#include <benchmark/benchmark.h>

#include "npl/algebra/random.hpp"
#include "npl/circuits/determinant.hpp"
#include "npl/meta/coeff_matrix.hpp"
#include "npl/meta/rank.hpp"
#include "npl/pit/engines.hpp"
#include "npl/circuits/families.hpp"
#include "npl/pit/generator.hpp"

namespace {

using namespace npl;

const PrimeField kField(PrimeField::kMersenne31);

std::vector<std::uint64_t> RawPoint(Rng& rng, std::size_t n) {
  std::vector<std::uint64_t> out;
  for (const FieldElement& e : rng.Point(kField, n)) out.push_back(e.value());
  return out;
}

void BM_DeterminantExpansion(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const AffineMatrixMap generic = AffineMatrixMap::Generic(kField, n);
  for (auto _ : state) {
    const SparsePoly det = DetProjection(generic);
    benchmark::DoNotOptimize(det.num_terms());
  }
}
BENCHMARK(BM_DeterminantExpansion)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);

void BM_DeterminantEvaluation(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Circuit det = DetProjectionCircuit(AffineMatrixMap::Generic(kField, n));
  Rng rng(1);
  const std::vector<std::uint64_t> point = RawPoint(rng, n * n);
  for (auto _ : state) benchmark::DoNotOptimize(det.EvaluateRaw(point));
}
BENCHMARK(BM_DeterminantEvaluation)->DenseRange(2, 6);

void BM_GeneratorEvaluation(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Generator g = DetCoeffGenerator(n, kField);
  Rng rng(2);
  const std::vector<std::uint64_t> seed = RawPoint(rng, g.seed_length());
  for (auto _ : state) benchmark::DoNotOptimize(g.EvaluateRaw(seed));
}
BENCHMARK(BM_GeneratorEvaluation)->DenseRange(2, 4)->Unit(benchmark::kMicrosecond);

void BM_PartialsRank(benchmark::State& state) {
  const auto v = static_cast<std::uint32_t>(state.range(0));
  const std::uint32_t d = 4;
  const SparsePoly f =
      SampleFamily(FamilyDescriptor::FullSpace(PolySpace::Homogeneous(v, d)), kField, 3).poly;
  for (auto _ : state) benchmark::DoNotOptimize(RankModP(PartialsMatrix(f, d, d / 2)));
}
BENCHMARK(BM_PartialsRank)->DenseRange(3, 7)->Unit(benchmark::kMicrosecond);

void BM_SchwartzZippel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Circuit det = DetProjectionCircuit(AffineMatrixMap::Generic(kField, n));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(PitSchwartzZippel(det, 25, ++seed).outcome());
}
BENCHMARK(BM_SchwartzZippel)->DenseRange(2, 6)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
