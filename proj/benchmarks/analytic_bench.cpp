// Copyright the spectral-bounds authors.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "spectral/analytic.hpp"
#include "spectral/bounds.hpp"

namespace {

using namespace spectral;

void BM_BesselZero(benchmark::State& state) {
  const double p = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bessel_zero(p, 10));
}
BENCHMARK(BM_BesselZero)->Arg(0)->Arg(5)->Arg(50);

void BM_BallSpectrum(benchmark::State& state) {
  for (auto _ : state) {
    Spectrum s = ball_spectrum(3, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(s.lambdas.data());
  }
}
BENCHMARK(BM_BallSpectrum)->Arg(20)->Arg(200);

void BM_EvaluateAll(benchmark::State& state) {
  const BoundContext ctx{2, 1.0, hemisphere_spectrum(static_cast<int>(state.range(0))).lambdas,
                         GeometryClass::Sphere};
  for (auto _ : state) {
    BoundReport rows = evaluate_all(ctx, ctx.count() - 1);
    benchmark::DoNotOptimize(rows.data());
  }
}
BENCHMARK(BM_EvaluateAll)->Arg(10)->Arg(100);

} // namespace
