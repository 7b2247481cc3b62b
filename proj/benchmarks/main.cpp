// Copyright the spectral-bounds authors.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

// Own main: the packaged benchmark_main archive carries LTO bytecode from a
// different compiler release.
BENCHMARK_MAIN();
