// Copyright the spectral-bounds authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "oracles/bessel_series.hpp"
#include "oracles/spectra.hpp"
#include "spectral/analytic.hpp"
#include "spectral/error.hpp"

using namespace spectral;

TEST(Bessel, LowOrderZerosMatchSeriesBisection) {
  for (int p = 0; p <= 2; ++p) {
    for (int k = 1; k <= 5; ++k) {
      EXPECT_NEAR(bessel_zero(p, k), oracle::bessel_zero_int(p, k), 1e-10) << "p=" << p << " k=" << k;
    }
  }
  EXPECT_NEAR(bessel_zero(0, 1), 2.404825557695773, 1e-12);
  EXPECT_NEAR(bessel_zero(1, 1), 3.831705970207512, 1e-12);
}

TEST(Bessel, HalfOrderZerosMatchElementaryForms) {
  for (int k = 1; k <= 6; ++k) {
    EXPECT_NEAR(bessel_zero(0.5, k), oracle::half_order_zero(1, k), 1e-10);
    EXPECT_NEAR(bessel_zero(1.5, k), oracle::half_order_zero(3, k), 1e-10);
  }
}

TEST(Bessel, ValuesMatchSeries) {
  // The long-double series cancels badly past x ~ 20, so it is only trusted below.
  for (double x : {0.0, 0.5, 3.0, 7.5, 11.9, 12.1, 16.0, 20.0}) {
    for (int p : {0, 1, 3}) {
      const double ref = static_cast<double>(oracle::bessel_j_int(p, x));
      EXPECT_NEAR(bessel_j(p, x), ref, 1e-11) << "p=" << p << " x=" << x;
    }
  }
  // Tabulated values.
  EXPECT_NEAR(bessel_j(0, 30.0), -0.0863679835810403, 1e-13);
  EXPECT_NEAR(bessel_j(1, 30.0), -0.1187510626166229, 1e-13);
  EXPECT_NEAR(bessel_j(0.5, 2.0), std::sqrt(2.0 / (std::numbers::pi * 2.0)) * std::sin(2.0), 1e-14);
}

TEST(Bessel, HighOrderZerosConverge) {
  const double z = bessel_zero(50, 50);
  EXPECT_GT(z, 50.0);
  EXPECT_LT(std::abs(bessel_j(50, z)), 1e-10);
  EXPECT_LT(bessel_zero(50, 49), z);
}

TEST(Bessel, ZerosBelowLimit) {
  const auto z = bessel_zeros_below(0, 10.0);
  ASSERT_EQ(z.size(), 3u);
  EXPECT_NEAR(z[2], oracle::bessel_zero_int(0, 3), 1e-10);
  EXPECT_THROW(bessel_zero(-1, 1), ArgumentError);
  EXPECT_THROW(bessel_zero(0, 0), ArgumentError);
  EXPECT_THROW(bessel_j(0, -1.0), DomainError);
}

TEST(Harmonics, Dimensions) {
  for (int l = 0; l < 6; ++l) {
    EXPECT_EQ(harmonic_dimension(3, l), 2 * l + 1);
    EXPECT_EQ(harmonic_dimension(2, l), l == 0 ? 1 : 2);
  }
  EXPECT_EQ(harmonic_dimension(4, 2), 9);
}

TEST(AnalyticSpectra, RectangleMatchesEnumeration) {
  const auto s = rectangle_spectrum(std::numbers::pi, std::numbers::pi, 4);
  EXPECT_EQ(s.lambdas, (std::vector<double>{2, 5, 5, 8}));
  const auto t = rectangle_spectrum(1.0, 2.5, 40);
  const auto ref = oracle::rectangle(1.0, 2.5, 40);
  for (int i = 0; i < 40; ++i) EXPECT_NEAR(t.lambdas[i], ref[i], 1e-12 * ref[i]);
  EXPECT_EQ(t.source, SpectrumSource::Analytic);
}

TEST(AnalyticSpectra, HemisphereMatchesParityCount) {
  const auto s = hemisphere_spectrum(30);
  EXPECT_EQ(s.lambdas, oracle::hemisphere(30));
  EXPECT_EQ(std::vector<double>(s.lambdas.begin(), s.lambdas.begin() + 6),
            (std::vector<double>{2, 6, 6, 12, 12, 12}));
}

TEST(AnalyticSpectra, Balls) {
  const auto b2 = ball_spectrum(2, 3);
  const double j01 = oracle::bessel_zero_int(0, 1);
  const double j11 = oracle::bessel_zero_int(1, 1);
  EXPECT_NEAR(b2.lambdas[0], j01 * j01, 1e-9);
  EXPECT_NEAR(b2.lambdas[1], j11 * j11, 1e-9);
  EXPECT_NEAR(b2.lambdas[2], j11 * j11, 1e-9);
  const auto b3 = ball_spectrum(3, 9);
  const double j32 = oracle::half_order_zero(3, 1);
  EXPECT_NEAR(b3.lambdas[0], std::numbers::pi * std::numbers::pi, 1e-9);
  for (int i = 1; i <= 3; ++i) EXPECT_NEAR(b3.lambdas[i], j32 * j32, 1e-9);
  // l = 2 shell (5-fold) comes before the second radial mode pi^2 * 4.
  EXPECT_NEAR(b3.lambdas[4], std::pow(bessel_zero(2.5, 1), 2), 1e-9);
  EXPECT_NEAR(b3.lambdas[8], std::pow(bessel_zero(2.5, 1), 2), 1e-9);
  AnalyticDomain big{AnalyticDomain::Kind::Ball, 1, 1, 2, 2.0};
  EXPECT_NEAR(analytic_spectrum(big, 1).lambdas[0], j01 * j01 / 4.0, 1e-9);
}

TEST(AnalyticSpectra, KindNames) {
  for (auto k : {AnalyticDomain::Kind::Rectangle, AnalyticDomain::Kind::Ball, AnalyticDomain::Kind::Hemisphere}) {
    EXPECT_EQ(analytic_kind_from_string(to_string(k)), k);
  }
  EXPECT_THROW(analytic_kind_from_string("torus"), ConfigurationError);
  EXPECT_THROW(rectangle_spectrum(1, 1, 0), ArgumentError);
}
