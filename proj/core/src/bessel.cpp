// Copyright the spectral-bounds authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <sstream>

#include "spectral/analytic.hpp"
#include "spectral/error.hpp"

namespace spectral {

namespace {

constexpr double kSeriesLimit = 12.0;

double series(double p, double x) {
  const double half = 0.5 * x;
  double term = std::exp(p * std::log(half) - std::lgamma(p + 1.0));
  double sum = term;
  const double q = -half * half;
  for (int k = 1; k < 500; ++k) {
    term *= q / (k * (k + p));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum) && k > 2) break;
  }
  return sum;
}

double miller(double p, double x) {
  const double nu0 = p - std::floor(p);
  const int target = static_cast<int>(std::floor(p));
  const double reach = std::max(static_cast<double>(target), x);
  int top = static_cast<int>(reach) + 60 + static_cast<int>(3.0 * std::sqrt(reach));
  top += top % 2; // start on an even index

  // Normalization weights of (x/2)^nu0 = sum_i c_i J_{nu0+2i}(x).
  auto weight = [nu0](int i) {
    if (i == 0) return std::tgamma(nu0 + 1.0);
    return (nu0 + 2.0 * i) * std::exp(std::lgamma(nu0 + i) - std::lgamma(i + 1.0));
  };

  double f_next = 0.0; // f_{k+1}
  double f = 1e-30;    // f_k
  double norm = (top % 2 == 0) ? weight(top / 2) * f : 0.0;
  double at_target = (top == target) ? f : 0.0;
  for (int k = top; k >= 1; --k) {
    const double f_prev = 2.0 * (nu0 + k) / x * f - f_next;
    f_next = f;
    f = f_prev;
    const int idx = k - 1;
    if (idx == target) at_target = f;
    if (idx % 2 == 0) norm += weight(idx / 2) * f;
    if (std::abs(f) > 1e200) {
      f *= 1e-200;
      f_next *= 1e-200;
      norm *= 1e-200;
      at_target *= 1e-200;
    }
  }
  return at_target * std::pow(0.5 * x, nu0) / norm;
}

} // namespace

double bessel_j(double p, double x) {
  if (!(p >= 0.0) || !(x >= 0.0)) {
    throw DomainError("bessel_j needs p >= 0 and x >= 0");
  }
  if (x == 0.0) return p == 0.0 ? 1.0 : 0.0;
  return x <= kSeriesLimit ? series(p, x) : miller(p, x);
}

namespace {

double derivative(double p, double x) { return p / x * bessel_j(p, x) - bessel_j(p + 1.0, x); }

// Refines a sign-changing bracket [lo, hi] by bisection, then polishes with
// Newton steps that must stay inside the bracket.
double refine_root(double p, double lo, double hi) {
  double flo = bessel_j(p, lo);
  for (int it = 0; it < 200 && hi - lo > 1e-13 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = bessel_j(p, mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 3; ++it) {
    const double step = bessel_j(p, x) / derivative(p, x);
    const double next = x - step;
    if (!(next >= lo - 1e-12) || !(next <= hi + 1e-12) || !std::isfinite(next)) break;
    x = next;
  }
  if (!std::isfinite(x)) {
    std::ostringstream msg;
    msg << "bessel zero refinement failed for order " << p;
    throw NumericError(msg.str());
  }
  return x;
}

// Consecutive zeros of J_p are more than 2.5 apart for every p >= 0, so a
// 0.5 scan step cannot step over a pair of sign changes. The first zero
// exceeds p.
constexpr double kScanStep = 0.5;

template <typename Stop>
std::vector<double> scan_zeros(double p, Stop stop) {
  std::vector<double> zeros;
  double lo = std::max(p, 1e-3);
  double flo = bessel_j(p, lo);
  for (int guard = 0; guard < 100000; ++guard) {
    const double hi = lo + kScanStep;
    if (stop(zeros, lo)) return zeros;
    const double fhi = bessel_j(p, hi);
    if (fhi == 0.0 || (fhi > 0.0) != (flo > 0.0)) {
      zeros.push_back(fhi == 0.0 ? hi : refine_root(p, lo, hi));
    }
    lo = hi;
    flo = fhi;
  }
  throw NumericError("bessel zero scan did not terminate");
}

} // namespace

double bessel_zero(double p, int k) {
  if (!(p >= 0.0) || k < 1) {
    throw ArgumentError("bessel_zero needs p >= 0 and k >= 1");
  }
  auto zeros = scan_zeros(p, [k](const std::vector<double>& z, double) {
    return static_cast<int>(z.size()) >= k;
  });
  return zeros[static_cast<std::size_t>(k - 1)];
}

std::vector<double> bessel_zeros_below(double p, double limit) {
  if (!(p >= 0.0)) {
    throw ArgumentError("bessel_zeros_below needs p >= 0");
  }
  auto zeros = scan_zeros(p, [limit](const std::vector<double>&, double x) { return x > limit; });
  while (!zeros.empty() && zeros.back() > limit) zeros.pop_back();
  return zeros;
}

} // namespace spectral
