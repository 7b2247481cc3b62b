// Copyright the spectral-bounds authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include <Eigen/Core>

namespace spectral {

struct TriMesh;

using ParamPoint = Eigen::Vector2d;

/// Axis-aligned parameter rectangle [u_min,u_max] x [v_min,v_max].
struct ParamRect {
  double u_min = 0.0;
  double u_max = 1.0;
  double v_min = 0.0;
  double v_max = 1.0;

  bool contains(const ParamPoint& p, double tol = 1e-12) const;
  double width() const { return u_max - u_min; }
  double height() const { return v_max - v_min; }

  bool operator==(const ParamRect&) const = default;
};

enum class ChartKind { Flat, SphereCap, Catenoid, Helicoid };

std::string to_string(ChartKind kind);
ChartKind chart_kind_from_string(const std::string& s);

/// Value of an immersion and its first and second parameter derivatives at a
/// point. Column layout: d = [y_u, y_v], dd = [y_uu, y_uv, y_vv].
struct ChartJet {
  Eigen::VectorXd y;
  Eigen::Matrix<double, Eigen::Dynamic, 2> d;
  Eigen::Matrix<double, Eigen::Dynamic, 3> dd;
};

/// A parametrized immersion of a surface patch into R^N.
///
/// The four supported kinds carry hard-coded analytic derivatives:
///  - Flat:      (u, v, 0, ..., 0) in R^N, N >= 2.
///  - SphereCap: unit sphere in geodesic polar (exponential) coordinates about
///               the north pole, (sin r / r * u, sin r / r * v, cos r) with
///               r = |(u,v)|; smooth at the pole. The cap is the parameter disk
///               of radius theta0.
///  - Catenoid:  c * (cosh v cos u, cosh v sin u, v).
///  - Helicoid:  (v cos u, v sin u, c u).
class ImmersedChart {
public:
  static ImmersedChart flat(std::string name, const ParamRect& domain, int ambient_dim = 2);
  static ImmersedChart sphere_cap(std::string name, double theta0);
  static ImmersedChart catenoid(std::string name, const ParamRect& domain, double scale = 1.0);
  static ImmersedChart helicoid(std::string name, const ParamRect& domain, double pitch = 1.0);

  const std::string& name() const { return name_; }
  ChartKind kind() const { return kind_; }
  const ParamRect& param_domain() const { return domain_; }
  int ambient_dim() const { return ambient_dim_; }
  static constexpr int intrinsic_dim() { return 2; }

  /// Shape parameter: theta0 for caps, scale for catenoids, pitch for helicoids.
  double shape_parameter() const { return shape_; }

  /// Throws DomainError when p lies outside param_domain().
  void require_inside(const ParamPoint& p) const;

  Eigen::VectorXd embed(const ParamPoint& p) const;
  ChartJet jet(const ParamPoint& p) const;

  bool operator==(const ImmersedChart&) const = default;

private:
  ImmersedChart(std::string name, ChartKind kind, const ParamRect& domain, int ambient_dim,
                double shape);

  ChartJet jet_unchecked(const ParamPoint& p) const;

  std::string name_;
  ChartKind kind_ = ChartKind::Flat;
  ParamRect domain_;
  int ambient_dim_ = 2;
  double shape_ = 1.0;
};

struct MetricSample {
  Eigen::Matrix2d g;
  double sqrt_det_g = 0.0;
};

MetricSample metric_at(const ImmersedChart& chart, const ParamPoint& p);

/// |H| with H = (trace of the second fundamental form) / n, so that
/// sum_alpha (Delta y_alpha)^2 = n^2 |H|^2.
double mean_curvature_norm_at(const ImmersedChart& chart, const ParamPoint& p);

/// Sum over coordinate functions of g(grad y_alpha, grad y_alpha); equals n for
/// any immersion.
double coordinate_gradient_sum(const ImmersedChart& chart, const ParamPoint& p);

/// max |H|^2 over the triangle centroids of a mesh generated from `chart`.
double sup_mean_curvature_sq(const ImmersedChart& chart, const TriMesh& mesh);

} // namespace spectral
