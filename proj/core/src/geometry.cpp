// Copyright the spectral-bounds authors.
// SPDX-License-Identifier: Apache-2.0

#include "spectral/geometry.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Dense>

#include "spectral/error.hpp"
#include "spectral/mesh.hpp"

namespace spectral {

namespace {

// Radial profile of the exponential map of the unit sphere and its scaled
// derivatives, all even functions of r:
//   f  = sin r / r,  f1 = f'(r) / r,  f2 = f1'(r) / r.
// Series below r = 1 avoid the cancellation in the closed forms.
struct RadialProfile {
  double f, f1, f2;
};

RadialProfile sphere_profile(double r) {
  if (r < 1.0) {
    const double r2 = r * r;
    double f = 1.0, f1 = 0.0, f2 = 0.0;
    double factorial = 1.0; // (2k+1)!
    for (int k = 1; k <= 20; ++k) {
      factorial *= (2.0 * k) * (2.0 * k + 1.0);
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      f += sign * std::pow(r2, k) / factorial;
      f1 += sign * (2.0 * k) * std::pow(r2, k - 1) / factorial;
      if (k >= 2) {
        f2 += sign * (2.0 * k) * (2.0 * k - 2.0) * std::pow(r2, k - 2) / factorial;
      }
    }
    return {f, f1, f2};
  }
  const double s = std::sin(r);
  const double c = std::cos(r);
  const double r2 = r * r;
  return {s / r, (r * c - s) / (r2 * r), (3.0 * s - 3.0 * r * c - r2 * s) / (r2 * r2 * r)};
}

} // namespace

bool ParamRect::contains(const ParamPoint& p, double tol) const {
  const double su = tol * std::max(1.0, std::max(std::abs(u_min), std::abs(u_max)));
  const double sv = tol * std::max(1.0, std::max(std::abs(v_min), std::abs(v_max)));
  return p.x() >= u_min - su && p.x() <= u_max + su && p.y() >= v_min - sv && p.y() <= v_max + sv;
}

std::string to_string(ChartKind kind) {
  switch (kind) {
  case ChartKind::Flat:
    return "flat";
  case ChartKind::SphereCap:
    return "sphere_cap";
  case ChartKind::Catenoid:
    return "catenoid";
  case ChartKind::Helicoid:
    return "helicoid";
  }
  return "unknown";
}

ChartKind chart_kind_from_string(const std::string& s) {
  if (s == "flat") return ChartKind::Flat;
  if (s == "sphere_cap") return ChartKind::SphereCap;
  if (s == "catenoid") return ChartKind::Catenoid;
  if (s == "helicoid") return ChartKind::Helicoid;
  throw ArgumentError("unknown chart kind '" + s + "'");
}

ImmersedChart::ImmersedChart(std::string name, ChartKind kind, const ParamRect& domain,
                             int ambient_dim, double shape)
    : name_(std::move(name)), kind_(kind), domain_(domain), ambient_dim_(ambient_dim),
      shape_(shape) {
  if (!(domain.u_max > domain.u_min) || !(domain.v_max > domain.v_min)) {
    throw ArgumentError("chart '" + name_ + "': empty parameter domain");
  }
}

ImmersedChart ImmersedChart::flat(std::string name, const ParamRect& domain, int ambient_dim) {
  if (ambient_dim < 2) {
    throw ArgumentError("flat chart needs ambient dimension >= 2");
  }
  return ImmersedChart(std::move(name), ChartKind::Flat, domain, ambient_dim, 1.0);
}

ImmersedChart ImmersedChart::sphere_cap(std::string name, double theta0) {
  if (!(theta0 > 0.0) || !(theta0 < std::numbers::pi)) {
    throw ArgumentError("sphere cap radius must lie in (0, pi)");
  }
  return ImmersedChart(std::move(name), ChartKind::SphereCap, {-theta0, theta0, -theta0, theta0}, 3,
                       theta0);
}

ImmersedChart ImmersedChart::catenoid(std::string name, const ParamRect& domain, double scale) {
  if (!(scale > 0.0)) {
    throw ArgumentError("catenoid scale must be positive");
  }
  return ImmersedChart(std::move(name), ChartKind::Catenoid, domain, 3, scale);
}

ImmersedChart ImmersedChart::helicoid(std::string name, const ParamRect& domain, double pitch) {
  if (!(pitch > 0.0)) {
    throw ArgumentError("helicoid pitch must be positive");
  }
  return ImmersedChart(std::move(name), ChartKind::Helicoid, domain, 3, pitch);
}

void ImmersedChart::require_inside(const ParamPoint& p) const {
  if (!domain_.contains(p)) {
    std::ostringstream msg;
    msg << "point (" << p.x() << ", " << p.y() << ") lies outside the parameter domain of chart '"
        << name_ << "'";
    throw DomainError(msg.str());
  }
}

Eigen::VectorXd ImmersedChart::embed(const ParamPoint& p) const {
  require_inside(p);
  return jet_unchecked(p).y;
}

ChartJet ImmersedChart::jet(const ParamPoint& p) const {
  require_inside(p);
  return jet_unchecked(p);
}

ChartJet ImmersedChart::jet_unchecked(const ParamPoint& p) const {
  const double u = p.x();
  const double v = p.y();
  const int N = ambient_dim_;
  ChartJet j;
  j.y = Eigen::VectorXd::Zero(N);
  j.d = Eigen::Matrix<double, Eigen::Dynamic, 2>::Zero(N, 2);
  j.dd = Eigen::Matrix<double, Eigen::Dynamic, 3>::Zero(N, 3);

  switch (kind_) {
  case ChartKind::Flat:
    j.y(0) = u;
    j.y(1) = v;
    j.d(0, 0) = 1.0;
    j.d(1, 1) = 1.0;
    break;

  case ChartKind::SphereCap: {
    const double r = std::hypot(u, v);
    const auto [f, f1, f2] = sphere_profile(r);
    j.y << f * u, f * v, std::cos(r);
    j.d << f + f1 * u * u, f1 * u * v, //
        f1 * u * v, f + f1 * v * v,     //
        -f * u, -f * v;
    j.dd << 3.0 * f1 * u + f2 * u * u * u, f1 * v + f2 * u * u * v, f1 * u + f2 * u * v * v, //
        f1 * v + f2 * u * u * v, f1 * u + f2 * u * v * v, 3.0 * f1 * v + f2 * v * v * v,     //
        -f - f1 * u * u, -f1 * u * v, -f - f1 * v * v;
    break;
  }

  case ChartKind::Catenoid: {
    const double c = shape_;
    const double ch = std::cosh(v), sh = std::sinh(v);
    const double cu = std::cos(u), su = std::sin(u);
    j.y << c * ch * cu, c * ch * su, c * v;
    j.d << -c * ch * su, c * sh * cu, //
        c * ch * cu, c * sh * su,     //
        0.0, c;
    j.dd << -c * ch * cu, -c * sh * su, c * ch * cu, //
        -c * ch * su, c * sh * cu, c * ch * su,      //
        0.0, 0.0, 0.0;
    break;
  }

  case ChartKind::Helicoid: {
    const double c = shape_;
    const double cu = std::cos(u), su = std::sin(u);
    j.y << v * cu, v * su, c * u;
    j.d << -v * su, cu, //
        v * cu, su,     //
        c, 0.0;
    j.dd << -v * cu, -su, 0.0, //
        -v * su, cu, 0.0,      //
        0.0, 0.0, 0.0;
    break;
  }
  }
  return j;
}

namespace {

Eigen::Matrix2d metric_from_jet(const ChartJet& j) { return j.d.transpose() * j.d; }

void require_positive(const ImmersedChart& chart, const ParamPoint& p, const Eigen::Matrix2d& g) {
  const double det = g.determinant();
  const double scale = g.trace() * g.trace();
  if (!(det > 1e-14 * scale) || !(g(0, 0) > 0.0)) {
    std::ostringstream msg;
    msg << "chart '" << chart.name() << "' is not an immersion at (" << p.x() << ", " << p.y()
        << "): det g = " << det;
    throw ImmersionError(msg.str());
  }
}

} // namespace

MetricSample metric_at(const ImmersedChart& chart, const ParamPoint& p) {
  const ChartJet j = chart.jet(p);
  MetricSample s;
  s.g = metric_from_jet(j);
  require_positive(chart, p, s.g);
  s.sqrt_det_g = std::sqrt(s.g.determinant());
  return s;
}

double mean_curvature_norm_at(const ImmersedChart& chart, const ParamPoint& p) {
  const ChartJet j = chart.jet(p);
  const Eigen::Matrix2d g = metric_from_jet(j);
  require_positive(chart, p, g);
  const Eigen::Matrix2d ginv = g.inverse();

  // Trace of the Hessian of the position vector, then drop its tangential part.
  const Eigen::VectorXd trace =
      ginv(0, 0) * j.dd.col(0) + 2.0 * ginv(0, 1) * j.dd.col(1) + ginv(1, 1) * j.dd.col(2);
  const Eigen::VectorXd tangential = j.d * (ginv * (j.d.transpose() * trace));
  const Eigen::VectorXd normal = trace - tangential;
  return normal.norm() / ImmersedChart::intrinsic_dim();
}

double coordinate_gradient_sum(const ImmersedChart& chart, const ParamPoint& p) {
  const ChartJet j = chart.jet(p);
  const Eigen::Matrix2d g = metric_from_jet(j);
  require_positive(chart, p, g);
  const Eigen::Matrix2d ginv = g.inverse();
  double sum = 0.0;
  for (int a = 0; a < chart.ambient_dim(); ++a) {
    const Eigen::Vector2d dy = j.d.row(a).transpose();
    sum += dy.dot(ginv * dy);
  }
  return sum;
}

double sup_mean_curvature_sq(const ImmersedChart& chart, const TriMesh& mesh) {
  if (mesh.chart_id != chart.name()) {
    throw ConfigurationError("mesh was generated from chart '" + mesh.chart_id +
                             "', not from '" + chart.name() + "'");
  }
  double best = 0.0;
  for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
    const double h = mean_curvature_norm_at(chart, mesh.centroid(static_cast<int>(t)));
    best = std::max(best, h * h);
  }
  return best;
}

} // namespace spectral
