// Copyright the spectral-bounds authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "spectral/spectrum.hpp"

namespace spectral {

/// J_p(x) for real order p >= 0 and x >= 0. Ascending series for x <= 12,
/// Miller downward recurrence normalized by the Neumann series of (x/2)^nu
/// beyond.
double bessel_j(double p, double x);

/// k-th positive zero j_{p,k} of J_p, to absolute accuracy 1e-9 or better.
double bessel_zero(double p, int k);

/// All positive zeros of J_p not exceeding `limit`, ascending.
std::vector<double> bessel_zeros_below(double p, double limit);

/// Dimension of the space of degree-l spherical harmonics on S^(n-1).
long long harmonic_dimension(int n, int l);

struct AnalyticDomain {
  enum class Kind { Rectangle, Ball, Hemisphere };

  Kind kind = Kind::Rectangle;
  double a = 1.0;      ///< rectangle side
  double b = 1.0;      ///< rectangle side
  int n = 2;           ///< ball dimension
  double radius = 1.0; ///< ball radius

  int intrinsic_dim() const { return kind == Kind::Ball ? n : 2; }
  bool operator==(const AnalyticDomain&) const = default;
};

std::string to_string(AnalyticDomain::Kind kind);
AnalyticDomain::Kind analytic_kind_from_string(const std::string& s);

/// Sorted pi^2 (i^2/a^2 + j^2/b^2), i, j >= 1, with multiplicity.
Spectrum rectangle_spectrum(double a, double b, int count);

/// Unit ball in R^n: j^2_{n/2-1+l,k} with the multiplicity of degree-l harmonics.
Spectrum ball_spectrum(int n, int count);

/// Unit hemisphere of S^2: l(l+1) for every harmonic Y_l^m odd under the
/// equatorial reflection, i.e. l + m odd.
Spectrum hemisphere_spectrum(int count);

Spectrum analytic_spectrum(const AnalyticDomain& domain, int count);

} // namespace spectral
