// Copyright 2026 The ecbounds Authors.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "ecbounds/chow.hpp"
#include "ecbounds/cn_family.hpp"
#include "ecbounds/curve.hpp"
#include "ecbounds/division_polynomials.hpp"
#include "ecbounds/heights.hpp"
#include "ecbounds/lattice.hpp"

namespace {

using namespace ecbounds;

void BM_DivisionPolynomialTable(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const CurveDivisionPolynomials sys = make_division_polynomials(Curve::e0());
    benchmark::DoNotOptimize(sys.phi(m));
  }
}
BENCHMARK(BM_DivisionPolynomialTable)->Arg(10)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_MulViaDivisionPolys(benchmark::State& state) {
  const CurveDivisionPolynomials sys = make_division_polynomials(Curve::e0());
  const Point g = scalar_mul(3, e0_generator());
  const int m = static_cast<int>(state.range(0));
  sys.phi(m + 1);
  for (auto _ : state) benchmark::DoNotOptimize(mul_via_division_polys(sys, m, g));
}
BENCHMARK(BM_MulViaDivisionPolys)->Arg(5)->Arg(20);

void BM_ScalarMul(benchmark::State& state) {
  const Point g = e0_generator();
  for (auto _ : state) benchmark::DoNotOptimize(scalar_mul(state.range(0), g));
}
BENCHMARK(BM_ScalarMul)->Arg(20)->Arg(200);

void BM_NeronTate(benchmark::State& state) {
  const Point p = scalar_mul(state.range(0), e0_generator());
  for (auto _ : state) benchmark::DoNotOptimize(neron_tate(p, 1e-3));
}
BENCHMARK(BM_NeronTate)->Arg(1)->Arg(10)->Unit(benchmark::kMicrosecond);

void BM_SuccessiveMinima(benchmark::State& state) {
  const IntegerLattice lat(IntegerMatrix::from_rows(
      {{3, 1, 4, 1}, {5, -9, 2, 6}, {5, 3, -5, 8}, {9, 7, 9, -3}}));
  for (auto _ : state) benchmark::DoNotOptimize(successive_minima(lat));
}
BENCHMARK(BM_SuccessiveMinima)->Unit(benchmark::kMicrosecond);

void BM_SegreDegree(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(segre_degree(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SegreDegree)->Arg(4)->Arg(6);

void BM_CnSearch(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cn_search(1, state.range(0)));
}
BENCHMARK(BM_CnSearch)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
