// Copyright the spectral-bounds authors.
// SPDX-License-Identifier: Apache-2.0

// Test-only closed-form spectra by brute enumeration.

#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace oracle {

/// pi^2 (i^2/a^2 + j^2/b^2) over a fixed 60 x 60 index window, sorted.
inline std::vector<double> rectangle(double a, double b, int count) {
  const double pi2 = std::numbers::pi * std::numbers::pi;
  std::vector<double> v;
  for (int i = 1; i <= 60; ++i) {
    for (int j = 1; j <= 60; ++j) v.push_back(pi2 * (i * i / (a * a) + j * j / (b * b)));
  }
  std::sort(v.begin(), v.end());
  v.resize(static_cast<std::size_t>(count));
  return v;
}

/// l(l+1) once for each m in [-l, l] with l + m odd.
inline std::vector<double> hemisphere(int count) {
  std::vector<double> v;
  for (int l = 1; static_cast<int>(v.size()) < count; ++l) {
    for (int m = -l; m <= l; ++m) {
      if ((l + m) % 2 != 0) v.push_back(l * (l + 1.0));
    }
  }
  v.resize(static_cast<std::size_t>(count));
  return v;
}

/// Zeros of the half-integer Bessel functions from their elementary forms:
/// j_{1/2,k} = k pi, and j_{3/2,k} solves tan x = x in (k pi, (k + 1/2) pi).
inline double half_order_zero(int twice_p, int k) {
  if (twice_p == 1) return k * std::numbers::pi;
  double lo = k * std::numbers::pi + 1e-9;
  double hi = (k + 0.5) * std::numbers::pi - 1e-9;
  for (int it = 0; it < 200; ++it) {
    const double m = 0.5 * (lo + hi);
    (std::tan(m) - m < 0 ? lo : hi) = m;
  }
  return 0.5 * (lo + hi);
}

/// Lumped-mass P1 on a uniform right-triangle grid equals the 5-point
/// difference Laplacian: (4/h^2)(sin^2(i h / 2) + sin^2(j h / 2)) on (0, pi)^2
/// with h = pi / cells.
inline std::vector<double> five_point_square(int cells, int count) {
  const double h = std::numbers::pi / cells;
  std::vector<double> v;
  for (int i = 1; i < cells; ++i) {
    for (int j = 1; j < cells; ++j) {
      const double si = std::sin(0.5 * i * h);
      const double sj = std::sin(0.5 * j * h);
      v.push_back(4.0 / (h * h) * (si * si + sj * sj));
    }
  }
  std::sort(v.begin(), v.end());
  v.resize(static_cast<std::size_t>(std::min<int>(count, static_cast<int>(v.size()))));
  return v;
}

} // namespace oracle
