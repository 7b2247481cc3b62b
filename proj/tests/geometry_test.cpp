// Copyright the spectral-bounds authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "spectral/error.hpp"
#include "spectral/geometry.hpp"

using namespace spectral;

namespace {

const ImmersedChart kCap = ImmersedChart::sphere_cap("cap", std::numbers::pi / 2);
const ImmersedChart kCatenoid = ImmersedChart::catenoid("cat", {0.0, 3.0, -1.0, 1.0}, 1.3);
const ImmersedChart kHelicoid = ImmersedChart::helicoid("hel", {0.0, 3.0, 0.5, 2.0}, 0.7);

// Central differences of embed() against the analytic jet.
void expect_jet_matches(const ImmersedChart& chart, const ParamPoint& p) {
  const double e = 1e-5;
  const ChartJet j = chart.jet(p);
  const ParamPoint du{e, 0.0};
  const ParamPoint dv{0.0, e};
  const Eigen::VectorXd yu = (chart.embed(p + du) - chart.embed(p - du)) / (2 * e);
  const Eigen::VectorXd yv = (chart.embed(p + dv) - chart.embed(p - dv)) / (2 * e);
  EXPECT_LT((yu - j.d.col(0)).norm(), 1e-8);
  EXPECT_LT((yv - j.d.col(1)).norm(), 1e-8);
  const Eigen::VectorXd yuu = (chart.embed(p + du) - 2 * chart.embed(p) + chart.embed(p - du)) / (e * e);
  const Eigen::VectorXd yvv = (chart.embed(p + dv) - 2 * chart.embed(p) + chart.embed(p - dv)) / (e * e);
  EXPECT_LT((yuu - j.dd.col(0)).norm(), 1e-4);
  EXPECT_LT((yvv - j.dd.col(2)).norm(), 1e-4);
}

} // namespace

TEST(Chart, FlatEmbedsIntoLeadingCoordinates) {
  const auto chart = ImmersedChart::flat("sq", {0, 1, 0, 1}, 4);
  const Eigen::VectorXd y = chart.embed({0.25, 0.75});
  ASSERT_EQ(y.size(), 4);
  EXPECT_DOUBLE_EQ(y(0), 0.25);
  EXPECT_DOUBLE_EQ(y(1), 0.75);
  EXPECT_EQ(y(2), 0.0);
  const MetricSample m = metric_at(chart, {0.5, 0.5});
  EXPECT_TRUE(m.g.isApprox(Eigen::Matrix2d::Identity()));
  EXPECT_DOUBLE_EQ(m.sqrt_det_g, 1.0);
  EXPECT_EQ(mean_curvature_norm_at(chart, {0.5, 0.5}), 0.0);
}

TEST(Chart, SphereCapLiesOnUnitSphereWithUnitMeanCurvature) {
  for (const ParamPoint p : {ParamPoint{0.0, 0.0}, ParamPoint{0.3, -0.2}, ParamPoint{1.0, 0.5}}) {
    EXPECT_NEAR(kCap.embed(p).norm(), 1.0, 1e-14);
    EXPECT_NEAR(mean_curvature_norm_at(kCap, p), 1.0, 1e-10);
    EXPECT_NEAR(coordinate_gradient_sum(kCap, p), 2.0, 1e-12);
  }
  // Geodesic polar coordinates: the metric is the identity at the pole.
  EXPECT_TRUE(metric_at(kCap, {0.0, 0.0}).g.isApprox(Eigen::Matrix2d::Identity(), 1e-12));
}

TEST(Chart, MinimalSurfacesHaveZeroMeanCurvature) {
  for (const ParamPoint p : {ParamPoint{0.5, 0.0}, ParamPoint{2.0, 0.7}, ParamPoint{1.1, -0.4}}) {
    EXPECT_LT(mean_curvature_norm_at(kCatenoid, p), 1e-12);
    EXPECT_NEAR(coordinate_gradient_sum(kCatenoid, p), 2.0, 1e-12);
  }
  for (const ParamPoint p : {ParamPoint{0.5, 0.6}, ParamPoint{2.0, 1.9}}) {
    EXPECT_LT(mean_curvature_norm_at(kHelicoid, p), 1e-12);
    EXPECT_NEAR(coordinate_gradient_sum(kHelicoid, p), 2.0, 1e-12);
  }
}

TEST(Chart, AnalyticDerivativesMatchDifferences) {
  expect_jet_matches(kCap, {0.4, 0.3});
  expect_jet_matches(kCap, {0.0, 0.0});
  expect_jet_matches(kCatenoid, {1.0, 0.3});
  expect_jet_matches(kHelicoid, {1.0, 1.2});
}

TEST(Chart, RejectsPointsOutsideDomain) {
  EXPECT_THROW(kCatenoid.embed({4.0, 0.0}), DomainError);
  EXPECT_THROW(metric_at(kCatenoid, {-0.5, 0.0}), DomainError);
  EXPECT_NO_THROW(kCatenoid.require_inside({3.0, 1.0}));
}

TEST(Chart, RejectsBadParameters) {
  EXPECT_THROW(ImmersedChart::flat("f", {0, 1, 0, 1}, 1), ArgumentError);
  EXPECT_THROW(ImmersedChart::sphere_cap("s", std::numbers::pi), ArgumentError);
  EXPECT_THROW(ImmersedChart::catenoid("c", {0, 1, 0, 1}, 0.0), ArgumentError);
  EXPECT_THROW(ImmersedChart::helicoid("h", {0, 1, 0, 1}, -1.0), ArgumentError);
  EXPECT_THROW(ImmersedChart::flat("f", {1, 0, 0, 1}), ArgumentError);
}

TEST(Chart, SphereCapAreaElementIsSinROverR) {
  const auto wide = ImmersedChart::sphere_cap("w", 3.0);
  for (double r : {0.1, 1.0, 2.9}) {
    EXPECT_NEAR(metric_at(wide, {r * 0.6, r * 0.8}).sqrt_det_g, std::sin(r) / r, 1e-12);
  }
}

TEST(Chart, KindNamesRoundTrip) {
  for (ChartKind k : {ChartKind::Flat, ChartKind::SphereCap, ChartKind::Catenoid, ChartKind::Helicoid}) {
    EXPECT_EQ(chart_kind_from_string(to_string(k)), k);
  }
  EXPECT_THROW(chart_kind_from_string("torus"), ArgumentError);
}
