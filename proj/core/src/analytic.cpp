// Copyright the spectral-bounds authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <numbers>

#include "spectral/analytic.hpp"
#include "spectral/error.hpp"

namespace spectral {

namespace {

long long binomial(long long a, long long b) {
  if (b < 0 || a < b) return 0;
  b = std::min(b, a - b);
  long long r = 1;
  for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

Spectrum analytic(std::vector<double> values, int count, int n_dim) {
  std::sort(values.begin(), values.end());
  values.resize(static_cast<std::size_t>(count));
  Spectrum s;
  s.lambdas = std::move(values);
  s.n_dim = n_dim;
  s.source = SpectrumSource::Analytic;
  return s;
}

void require_count(int count) {
  if (count < 1) throw ArgumentError("spectrum count must be at least 1");
}

} // namespace

long long harmonic_dimension(int n, int l) {
  if (n < 2 || l < 0) throw ArgumentError("harmonic_dimension needs n >= 2 and l >= 0");
  return binomial(l + n - 1, n - 1) - binomial(l + n - 3, n - 1);
}

std::string to_string(AnalyticDomain::Kind kind) {
  switch (kind) {
  case AnalyticDomain::Kind::Rectangle: return "rectangle";
  case AnalyticDomain::Kind::Ball: return "ball";
  case AnalyticDomain::Kind::Hemisphere: return "hemisphere";
  }
  return "unknown";
}

AnalyticDomain::Kind analytic_kind_from_string(const std::string& s) {
  if (s == "rectangle") return AnalyticDomain::Kind::Rectangle;
  if (s == "ball") return AnalyticDomain::Kind::Ball;
  if (s == "hemisphere") return AnalyticDomain::Kind::Hemisphere;
  throw ConfigurationError("unknown analytic domain '" + s + "'");
}

Spectrum rectangle_spectrum(double a, double b, int count) {
  if (!(a > 0.0) || !(b > 0.0)) throw ArgumentError("rectangle sides must be positive");
  require_count(count);
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  auto value = [&](long long i, long long j) {
    return pi2 * (static_cast<double>(i * i) / (a * a) + static_cast<double>(j * j) / (b * b));
  };
  for (long long w = 8;; w *= 2) {
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(w * w));
    for (long long i = 1; i <= w; ++i)
      for (long long j = 1; j <= w; ++j) values.push_back(value(i, j));
    if (static_cast<long long>(values.size()) < count) continue;
    std::nth_element(values.begin(), values.begin() + (count - 1), values.end());
    // Anything outside the window is at least this large.
    const double outside = std::min(value(w + 1, 1), value(1, w + 1));
    if (values[static_cast<std::size_t>(count - 1)] <= outside) return analytic(values, count, 2);
  }
}

Spectrum ball_spectrum(int n, int count) {
  if (n < 2) throw ArgumentError("ball_spectrum needs n >= 2");
  require_count(count);
  const double base = 0.5 * n - 1.0;
  for (double limit = 2.0 * bessel_zero(base, 1) + 4.0;; limit *= 1.5) {
    std::vector<double> values;
    for (int l = 0;; ++l) {
      const auto zeros = bessel_zeros_below(base + l, limit);
      if (zeros.empty()) break; // first zeros increase with the order
      const long long mult = harmonic_dimension(n, l);
      for (double z : zeros)
        for (long long m = 0; m < mult; ++m) values.push_back(z * z);
      if (static_cast<long long>(values.size()) > 50'000'000) {
        throw NumericError("ball_spectrum enumeration too large");
      }
    }
    if (static_cast<int>(values.size()) >= count) return analytic(values, count, n);
  }
}

Spectrum hemisphere_spectrum(int count) {
  require_count(count);
  std::vector<double> values;
  for (int l = 1; static_cast<int>(values.size()) < count; ++l) {
    for (int m = -l; m <= l; ++m) {
      if ((l + m) % 2 != 0) values.push_back(static_cast<double>(l) * (l + 1));
    }
  }
  return analytic(values, count, 2);
}

Spectrum analytic_spectrum(const AnalyticDomain& domain, int count) {
  switch (domain.kind) {
  case AnalyticDomain::Kind::Rectangle: return rectangle_spectrum(domain.a, domain.b, count);
  case AnalyticDomain::Kind::Ball: {
    if (!(domain.radius > 0.0)) throw ArgumentError("ball radius must be positive");
    Spectrum s = ball_spectrum(domain.n, count);
    for (double& v : s.lambdas) v /= domain.radius * domain.radius;
    return s;
  }
  case AnalyticDomain::Kind::Hemisphere: return hemisphere_spectrum(count);
  }
  throw ArgumentError("unknown analytic domain");
}

} // namespace spectral
