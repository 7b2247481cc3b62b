// Copyright the spectral-bounds authors.
// SPDX-License-Identifier: Apache-2.0

// Test-only Bessel oracle: integer-order ascending series in long double and
// plain bisection. Shares no code with the library.

#pragma once

#include <cmath>

namespace oracle {

inline long double bessel_j_int(int p, long double x) {
  long double term = 1.0L;
  for (int i = 1; i <= p; ++i) term *= x / (2.0L * i);
  long double sum = term;
  const long double q = -(x * x) / 4.0L;
  for (int m = 1; m < 400; ++m) {
    term *= q / (static_cast<long double>(m) * (m + p));
    sum += term;
    if (std::fabs(term) < 1e-30L * std::fabs(sum)) break;
  }
  return sum;
}

/// k-th zero of J_p, integer p, by stepping 0.05 to a sign change then
/// bisecting to machine precision.
inline double bessel_zero_int(int p, int k) {
  long double lo = p == 0 ? 0.05L : static_cast<long double>(p);
  long double flo = bessel_j_int(p, lo);
  int found = 0;
  for (;;) {
    const long double hi = lo + 0.05L;
    const long double fhi = bessel_j_int(p, hi);
    if ((flo < 0) != (fhi < 0) && ++found == k) {
      long double a = lo;
      long double b = hi;
      long double fa = flo;
      for (int it = 0; it < 200; ++it) {
        const long double m = 0.5L * (a + b);
        const long double fm = bessel_j_int(p, m);
        if ((fm < 0) == (fa < 0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      return static_cast<double>(0.5L * (a + b));
    }
    lo = hi;
    flo = fhi;
  }
}

} // namespace oracle
