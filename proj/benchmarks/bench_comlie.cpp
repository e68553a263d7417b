// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The comlie Authors

#include <benchmark/benchmark.h>

#include <random>

#include "comlie/cohomology.hpp"
#include "comlie/cup.hpp"
#include "comlie/morse.hpp"

using namespace comlie;

namespace {

Matrix random_gf2(std::size_t rows, std::size_t cols) {
  std::mt19937_64 rng(rows * 7919 + cols);
  Matrix m(gf2(), rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<Elem>(rng() & 1);
  return m;
}

void BM_Rank(benchmark::State& state, Elimination how) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix m = random_gf2(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m, how));
  state.SetComplexityN(state.range(0));
}
BENCHMARK_CAPTURE(BM_Rank, packed, Elimination::packed)->RangeMultiplier(2)->Range(64, 512);
BENCHMARK_CAPTURE(BM_Rank, generic, Elimination::generic)->RangeMultiplier(2)->Range(64, 512);

void BM_DifferentialSparse(benchmark::State& state) {
  const Module m = trivial_module(zassenhaus_e(3));
  const SpacePtr s = make_space(m, static_cast<std::size_t>(state.range(0)), Flavor::symmetric);
  for (auto _ : state) benchmark::DoNotOptimize(Differential(s).sparse());
}
BENCHMARK(BM_DifferentialSparse)->DenseRange(2, 5);

void BM_DifferentialDense(benchmark::State& state) {
  const Module m = trivial_module(zassenhaus_e(3));
  const SpacePtr s = make_space(m, static_cast<std::size_t>(state.range(0)), Flavor::symmetric);
  for (auto _ : state) benchmark::DoNotOptimize(Differential(s).dense());
}
BENCHMARK(BM_DifferentialDense)->DenseRange(2, 4);

void BM_Cohomology(benchmark::State& state) {
  const Module m = trivial_module(zassenhaus_e(3));
  for (auto _ : state) benchmark::DoNotOptimize(cohomology(m, static_cast<std::size_t>(state.range(0))).dim_h());
}
BENCHMARK(BM_Cohomology)->DenseRange(1, 4);

void BM_SquareIsZeroTensor(benchmark::State& state) {
  const Module m = adjoint_module(zassenhaus_e(3));
  for (auto _ : state) benchmark::DoNotOptimize(square_is_zero(m, static_cast<std::size_t>(state.range(0)), Flavor::tensor));
}
BENCHMARK(BM_SquareIsZeroTensor)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_RingTable(benchmark::State& state) {
  const Algebra h = heisenberg(1);
  for (auto _ : state) benchmark::DoNotOptimize(RingTable(h, static_cast<std::size_t>(state.range(0))).max_degree());
}
BENCHMARK(BM_RingTable)->DenseRange(2, 5);

void BM_MorseHeisenberg(benchmark::State& state) {
  const auto l = static_cast<std::size_t>(state.range(0));
  const ComplexGraph g = build_graph(trivial_module(heisenberg(l)), 4);
  const Matching m = heisenberg_matching(g, l);
  for (auto _ : state) benchmark::DoNotOptimize(morse_complex(g, m).critical.size());
}
BENCHMARK(BM_MorseHeisenberg)->DenseRange(1, 3);

}  // namespace

BENCHMARK_MAIN();
