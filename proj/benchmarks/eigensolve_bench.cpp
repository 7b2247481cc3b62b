// Copyright the spectral-bounds authors.
// SPDX-License-Identifier: Apache-2.0

#include <numbers>

#include <benchmark/benchmark.h>

#include "spectral/eigensolve.hpp"

namespace {

using namespace spectral;

DirichletSystem square(int cells) {
  const TriMesh mesh = mesh_rectangle(std::numbers::pi, std::numbers::pi, std::numbers::pi / cells);
  return apply_dirichlet(assemble(mesh, mesh.chart), mesh);
}

// Lowest 8 pairs; 16 and 24 cells stay on the dense path, larger grids iterate.
void BM_SolveLowest(benchmark::State& state) {
  const DirichletSystem sys = square(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Spectrum s = solve_lowest(sys, 8);
    benchmark::DoNotOptimize(s.lambdas.data());
  }
  state.counters["dofs"] = sys.dimension();
}
BENCHMARK(BM_SolveLowest)->Arg(16)->Arg(24)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_SolveAll(benchmark::State& state) {
  const DirichletSystem sys = square(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Spectrum s = solve_all(sys);
    benchmark::DoNotOptimize(s.lambdas.data());
  }
  state.counters["dofs"] = sys.dimension();
}
BENCHMARK(BM_SolveAll)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

} // namespace
