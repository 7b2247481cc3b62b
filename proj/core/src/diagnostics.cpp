// Copyright the spectral-bounds authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Dense>

#include "spectral/diagnostics.hpp"
#include "spectral/error.hpp"
#include "spectral/fem.hpp"

namespace spectral {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
/// Columns used by the pointwise linear-relation check.
constexpr int kRelationModes = 10;

struct ElementGeometry {
  Eigen::Matrix<double, 2, 3> grad;
  Eigen::Matrix2d ginv;
  double area = 0.0;
  std::array<int, 3> v;
};

std::vector<ElementGeometry> element_geometry(const TriMesh& mesh, const ImmersedChart& chart) {
  std::vector<ElementGeometry> out(static_cast<std::size_t>(mesh.triangle_count()));
  for (int t = 0; t < mesh.triangle_count(); ++t) {
    const auto& tri = mesh.triangles[static_cast<std::size_t>(t)];
    const ParamPoint& p0 = mesh.params[static_cast<std::size_t>(tri[0])];
    const ParamPoint& p1 = mesh.params[static_cast<std::size_t>(tri[1])];
    const ParamPoint& p2 = mesh.params[static_cast<std::size_t>(tri[2])];
    const MetricSample ms = metric_at(chart, mesh.centroid(t));
    ElementGeometry& e = out[static_cast<std::size_t>(t)];
    e.grad = hat_gradients(p0, p1, p2);
    e.ginv = ms.g.inverse();
    e.area = ms.sqrt_det_g * mesh.param_area(t);
    e.v = tri;
  }
  return out;
}

Eigen::Vector3d gather(const Eigen::VectorXd& f, const std::array<int, 3>& v) {
  return {f(v[0]), f(v[1]), f(v[2])};
}

/// u^T M_T u for the P1 element mass matrix.
double element_mass_form(double area, const Eigen::Vector3d& u) {
  return area / 12.0 * (u.squaredNorm() + u.sum() * u.sum());
}

Eigen::MatrixXd lift_modes(const TriMesh& mesh, const Eigen::MatrixXd& reduced) {
  Eigen::MatrixXd full = Eigen::MatrixXd::Zero(mesh.vertex_count(), reduced.cols());
  Eigen::Index r = 0;
  for (int v = 0; v < mesh.vertex_count(); ++v) {
    if (!mesh.boundary[static_cast<std::size_t>(v)]) full.row(v) = reduced.row(r++);
  }
  return full;
}

/// Lumped-mass discrete Laplacian on interior vertices, zero on the boundary.
Eigen::MatrixXd lumped_laplacian(const Eigen::SparseMatrix<double>& K, const Eigen::VectorXd& lumped,
                                 const std::vector<char>& boundary, const Eigen::MatrixXd& f) {
  Eigen::MatrixXd lap = -(K * f);
  for (Eigen::Index i = 0; i < lap.rows(); ++i) {
    if (boundary[static_cast<std::size_t>(i)]) {
      lap.row(i).setZero();
    } else {
      lap.row(i) /= lumped(i);
    }
  }
  return lap;
}

double relative(double diff, double scale) {
  return scale > 0.0 ? std::abs(diff) / scale : std::abs(diff);
}

Residual item(std::string name, double value, ResidualKind kind, double threshold = 0.0) {
  return {std::move(name), value, kind, threshold};
}

std::string format_t(double t) {
  std::ostringstream s;
  s.precision(6);
  s << t;
  return s.str();
}

void require_modes(const DiagnosticsWorkspace& ws, int needed, const char* what) {
  if (ws.mode_count() < needed) {
    std::ostringstream msg;
    msg << what << " needs " << needed << " modes, workspace has " << ws.mode_count();
    throw ArgumentError(msg.str());
  }
}

bool is_minimal_chart(const ImmersedChart& chart) {
  return chart.kind() == ChartKind::Flat || chart.kind() == ChartKind::Catenoid ||
         chart.kind() == ChartKind::Helicoid;
}

/// max over alpha of sum_{j=alpha+1..k} (lambda_{k+1} - lambda_j) A^2 / weight,
/// with the maximizing alpha (1-based, first on ties).
std::pair<double, int> weighted_gap_max(const DiagnosticsWorkspace& ws, int k) {
  double best = -kInf;
  int arg = 1;
  for (int alpha = 1; alpha <= ws.N; ++alpha) {
    double s = 0.0;
    for (int j = alpha + 1; j <= k; ++j) {
      s += (ws.lambda(k + 1) - ws.lambda(j)) * ws.weighted_a_sq(alpha, j);
    }
    if (s > best) {
      best = s;
      arg = alpha;
    }
  }
  return {best, arg};
}

} // namespace

Eigen::VectorXd PowerMoments::scaled_beta_sq(double lambda1) const {
  return D.array().square() / (lambda1 * norm_sq);
}

Eigen::VectorXd PowerMoments::beta(double lambda1) const {
  if (t == 1.0) {
    throw ArgumentError("beta is undefined at t = 1: the normalizing factor (t-1)^2 vanishes");
  }
  return D / std::sqrt(c() * lambda1 * norm_sq);
}

double DiagnosticsWorkspace::weighted_a_sq(int alpha, int j) const {
  const double w = grad_weight(alpha - 1);
  if (!(w > 0.0)) return 0.0;
  const double a = A(alpha - 1, j - 1);
  return a * a / w;
}

DiagnosticsWorkspace build_workspace(const TriMesh& mesh, const ImmersedChart& chart,
                                     const Spectrum& spec, double t) {
  if (spec.source != SpectrumSource::Fem || !spec.has_modes()) {
    throw ArgumentError("diagnostics need a FEM spectrum with eigenfunctions");
  }
  if (spec.modes.rows() != mesh.interior_count()) {
    throw ConfigurationError("spectrum modes do not match the mesh interior");
  }
  if (!(t > 0.5)) throw ArgumentError("trial exponent t must exceed 1/2");
  const int N = mesh.ambient_dim();
  const int m = static_cast<int>(spec.modes.cols());
  if (m < N + 1) {
    std::ostringstream msg;
    msg << "diagnostics need at least N+1 = " << N + 1 << " modes, got " << m;
    throw ArgumentError(msg.str());
  }

  DiagnosticsWorkspace ws;
  ws.n = ImmersedChart::intrinsic_dim();
  ws.N = N;
  ws.flat = chart.kind() == ChartKind::Flat;
  ws.complete = spec.complete;
  ws.sup_h_sq = sup_mean_curvature_sq(chart, mesh);
  ws.lambdas.assign(spec.lambdas.begin(), spec.lambdas.begin() + m);
  ws.modes = lift_modes(mesh, spec.modes);
  ws.boundary = mesh.boundary;

  const FemMatrices fem = assemble(mesh, chart);
  ws.K = fem.stiffness.data;
  ws.M = fem.mass.data;
  ws.lumped_mass = lumped(fem.mass);

  const Eigen::VectorXd u1 = ws.modes.col(0);
  if (u1.minCoeff() < -1e-6 * u1.maxCoeff() || !(u1.maxCoeff() > 0.0)) {
    throw Error("first eigenfunction is not sign-normalized to be positive");
  }

  ws.coords = mesh.embedded;
  const Eigen::MatrixXd Mu = ws.M * ws.modes;
  // a_{alpha j} = int y_alpha u_1 u_{j+1}
  const Eigen::MatrixXd yu = ws.coords.array().colwise() * u1.array();
  const Eigen::MatrixXd a = yu.transpose() * Mu.middleCols(1, N);
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  const Eigen::MatrixXd qh = qr.householderQ();
  ws.q_matrix = qh.transpose();
  ws.r_matrix = ws.q_matrix * a;

  const Eigen::MatrixXd ybar = ws.coords * ws.q_matrix.transpose();
  const Eigen::MatrixXd ybar_u = ybar.array().colwise() * u1.array();
  ws.b_shifts = ybar_u.transpose() * Mu.col(0);
  ws.z_fields = ybar.rowwise() - ws.b_shifts.transpose();

  const Eigen::MatrixXd W = ws.z_fields.array().colwise() * u1.array();
  const Eigen::MatrixXd MW = ws.M * W;
  const Eigen::MatrixXd KW = ws.K * W;
  ws.A = MW.transpose() * ws.modes;
  const double l1 = ws.lambdas[0];
  ws.zu_norm_sq.resize(N);
  ws.zu_energy.resize(N);
  for (int alpha = 0; alpha < N; ++alpha) {
    ws.zu_norm_sq(alpha) = W.col(alpha).dot(MW.col(alpha));
    ws.zu_energy(alpha) = W.col(alpha).dot(KW.col(alpha)) - l1 * ws.zu_norm_sq(alpha);
  }

  ws.B = Eigen::MatrixXd::Zero(N, m);
  ws.grad_weight = Eigen::VectorXd::Zero(N);
  for (const ElementGeometry& e : element_geometry(mesh, chart)) {
    const Eigen::Vector2d du1 = e.grad * gather(u1, e.v);
    const double u1_form = element_mass_form(e.area, gather(u1, e.v));
    Eigen::RowVectorXd mean_u(m);
    for (int j = 0; j < m; ++j) mean_u(j) = gather(ws.modes.col(j), e.v).sum() / 3.0;
    for (int alpha = 0; alpha < N; ++alpha) {
      const Eigen::Vector2d dz = e.grad * gather(ws.z_fields.col(alpha), e.v);
      ws.B.row(alpha) += e.area * dz.dot(e.ginv * du1) * mean_u;
      ws.grad_weight(alpha) += dz.dot(e.ginv * dz) * u1_form;
    }
  }

  const Eigen::MatrixXd lap = lumped_laplacian(ws.K, ws.lumped_mass, ws.boundary, ws.z_fields);
  const Eigen::MatrixXd S = ws.M * lap;
  const Eigen::MatrixXd uu1 = ws.modes.array().colwise() * u1.array();
  ws.C = S.transpose() * uu1;

  ws.moments.t = t;
  ws.moments = power_moments(ws, t);
  return ws;
}

PowerMoments power_moments(const DiagnosticsWorkspace& ws, double t) {
  if (!(t > 0.5)) throw ArgumentError("trial exponent t must exceed 1/2");
  PowerMoments pm;
  pm.t = t;
  const Eigen::VectorXd u1 = ws.modes.col(0);
  pm.p = u1.unaryExpr([t](double x) { return x > 0.0 ? std::pow(x, t) : 0.0; });
  const Eigen::VectorXd Mp = ws.M * pm.p;
  const Eigen::VectorXd Kp = ws.K * pm.p;
  const double l1 = ws.lambdas[0];
  pm.D = ws.modes.transpose() * Mp;
  pm.norm_sq = pm.p.dot(Mp);
  pm.energy = pm.p.dot(Kp) - l1 * pm.norm_sq;
  const Eigen::MatrixXd W = ws.z_fields.array().colwise() * u1.array();
  pm.cross = W.transpose() * Kp - l1 * (W.transpose() * Mp);
  return pm;
}

const Residual& ResidualReport::at(const std::string& name) const {
  for (const Residual& r : items) {
    if (r.name == name) return r;
  }
  throw ArgumentError("no residual '" + name + "' in check '" + check + "'");
}

bool ResidualReport::thresholds_pass() const {
  return std::all_of(items.begin(), items.end(), [](const Residual& r) {
    return r.kind != ResidualKind::Threshold || r.value <= r.threshold;
  });
}

std::vector<TrendVerdict> compare_levels(const std::vector<ResidualReport>& coarse,
                                         const std::vector<ResidualReport>& fine) {
  std::vector<TrendVerdict> out;
  for (const ResidualReport& f : fine) {
    const auto c = std::find_if(coarse.begin(), coarse.end(),
                                [&](const ResidualReport& r) { return r.check == f.check; });
    if (c == coarse.end()) continue;
    for (const Residual& item : f.items) {
      if (item.kind != ResidualKind::Trend) continue;
      const auto ci = std::find_if(c->items.begin(), c->items.end(),
                                   [&](const Residual& r) { return r.name == item.name; });
      if (ci == c->items.end()) continue;
      TrendVerdict v;
      v.check = f.check;
      v.name = item.name;
      v.coarse = ci->value;
      v.fine = item.value;
      v.pass = v.fine <= kTrendFloor || v.coarse >= kTrendFactor * v.fine;
      out.push_back(std::move(v));
    }
  }
  return out;
}

ResidualReport check_linear_relation(const DiagnosticsWorkspace& ws) {
  ResidualReport rep{"linear_relation", {}};
  const int J = std::min(ws.mode_count(), kRelationModes);
  const double l1 = ws.lambdas[0];
  double worst = 0.0;
  double scale = 0.0;
  double reduced = 0.0; // the relation with C dropped, meaningful on flat charts
  for (int alpha = 0; alpha < ws.N; ++alpha) {
    for (int j = 0; j < J; ++j) {
      const double twoB = 2.0 * ws.B(alpha, j);
      const double gapA = (l1 - ws.lambdas[static_cast<std::size_t>(j)]) * ws.A(alpha, j);
      const double c = ws.C(alpha, j);
      worst = std::max(worst, std::abs(twoB - gapA + c));
      reduced = std::max(reduced, std::abs(twoB - gapA));
      scale = std::max({scale, std::abs(twoB), std::abs(gapA), std::abs(c)});
    }
  }
  rep.items.push_back(item("relation", relative(worst, scale), ResidualKind::Trend));
  if (ws.flat) {
    rep.items.push_back(item("relation_without_laplacian", relative(reduced, scale), ResidualKind::Info));
  }
  return rep;
}

ResidualReport check_parseval(const DiagnosticsWorkspace& ws) {
  ResidualReport rep{"parseval", {}};
  const double l1 = ws.lambdas[0];
  const double weight_scale = ws.grad_weight.maxCoeff();
  double parseval = 0.0;
  double weighted = 0.0;
  double dual = 0.0;
  for (int alpha = 0; alpha < ws.N; ++alpha) {
    double sum_sq = 0.0;
    double sum_energy = 0.0;
    for (int j = alpha + 1; j < ws.mode_count(); ++j) {
      const double a = ws.A(alpha, j);
      sum_sq += a * a;
      sum_energy += (ws.lambdas[static_cast<std::size_t>(j)] - l1) * a * a;
    }
    const double norm_scale = ws.zu_norm_sq.maxCoeff();
    parseval = std::max(parseval, relative(ws.zu_norm_sq(alpha) - sum_sq, norm_scale));
    weighted = std::max(weighted, relative(ws.zu_energy(alpha) - ws.grad_weight(alpha), weight_scale));
    dual = std::max(dual, relative(ws.zu_energy(alpha) - sum_energy, weight_scale));
  }
  const ResidualKind exact = ws.complete ? ResidualKind::Threshold : ResidualKind::Info;
  rep.items.push_back(item("norm_expansion", parseval, exact, 1e-8));
  rep.items.push_back(item("weighted_gradient", weighted, ResidualKind::Trend));
  rep.items.push_back(item("weighted_gradient_basis_sum", dual, exact, 1e-8));
  return rep;
}

ResidualReport check_gradient_bound(const DiagnosticsWorkspace& ws, const TriMesh& mesh,
                                    const ImmersedChart& chart) {
  ResidualReport rep{"gradient_bound", {}};
  double worst = 0.0;
  for (const ElementGeometry& e : element_geometry(mesh, chart)) {
    for (int alpha = 0; alpha < ws.N; ++alpha) {
      const Eigen::Vector2d dz = e.grad * gather(ws.z_fields.col(alpha), e.v);
      worst = std::max(worst, dz.dot(e.ginv * dz));
    }
  }
  rep.items.push_back(item("max_gradient_sq", worst, ResidualKind::Info));
  rep.items.push_back(item("excess_over_one", std::max(0.0, worst - 1.0),
                           ws.flat ? ResidualKind::Threshold : ResidualKind::Trend, 1e-8));
  return rep;
}

ResidualReport check_lemma21(const TriMesh& mesh, const ImmersedChart& chart,
                             const Eigen::VectorXd& probe) {
  if (probe.size() != mesh.vertex_count()) {
    throw ArgumentError("probe function must have one value per mesh vertex");
  }
  ResidualReport rep{"coordinate_identities", {}};
  const bool flat = chart.kind() == ChartKind::Flat;
  const double n = ImmersedChart::intrinsic_dim();
  const Eigen::MatrixXd& Y = mesh.embedded;

  double gradient_sum = 0.0;
  double probe_res = 0.0;
  double probe_scale = 0.0;
  for (const ElementGeometry& e : element_geometry(mesh, chart)) {
    Eigen::MatrixXd J(Y.cols(), 2);
    for (Eigen::Index alpha = 0; alpha < Y.cols(); ++alpha) {
      J.row(alpha) = (e.grad * gather(Y.col(alpha), e.v)).transpose();
    }
    const Eigen::Matrix2d JtJ = J.transpose() * J;
    gradient_sum = std::max(gradient_sum, std::abs((e.ginv * JtJ).trace() - n));
    const Eigen::Vector2d du = e.grad * gather(probe, e.v);
    const Eigen::Vector2d gu = e.ginv * du;
    const double norm_sq = du.dot(gu);
    probe_res = std::max(probe_res, std::abs(gu.dot(JtJ * gu) - norm_sq));
    probe_scale = std::max(probe_scale, norm_sq);
  }

  const FemMatrices fem = assemble(mesh, chart);
  const Eigen::VectorXd ml = lumped(fem.mass);
  const Eigen::MatrixXd lap = lumped_laplacian(fem.stiffness.data, ml, mesh.boundary, Y);

  // Pointwise checks skip the ring of vertices touching the boundary.
  std::vector<char> skip = mesh.boundary;
  for (const auto& tri : mesh.triangles) {
    const bool touches = mesh.boundary[static_cast<std::size_t>(tri[0])] ||
                         mesh.boundary[static_cast<std::size_t>(tri[1])] ||
                         mesh.boundary[static_cast<std::size_t>(tri[2])];
    if (touches) {
      for (int v : tri) skip[static_cast<std::size_t>(v)] = 1;
    }
  }
  double curv_mean = 0.0;
  double curv_max = 0.0;
  double tang_mean = 0.0;
  double tang_max = 0.0;
  double weight = 0.0;
  for (int v = 0; v < mesh.vertex_count(); ++v) {
    if (skip[static_cast<std::size_t>(v)]) continue;
    const ParamPoint& p = mesh.params[static_cast<std::size_t>(v)];
    const Eigen::VectorXd dy = lap.row(v).transpose();
    const double h = mean_curvature_norm_at(chart, p);
    const double curv = std::abs(dy.squaredNorm() - n * n * h * h);
    const ChartJet jet = chart.jet(p);
    const Eigen::Matrix2d g = jet.d.transpose() * jet.d;
    const Eigen::Vector2d proj = jet.d.transpose() * dy;
    const double tang = std::sqrt(std::max(0.0, proj.dot(g.inverse() * proj)));
    curv_mean += ml(v) * curv;
    tang_mean += ml(v) * tang;
    weight += ml(v);
    curv_max = std::max(curv_max, curv);
    tang_max = std::max(tang_max, tang);
  }
  if (weight > 0.0) {
    curv_mean /= weight;
    tang_mean /= weight;
  }

  const ResidualKind gated = flat ? ResidualKind::Threshold : ResidualKind::Trend;
  rep.items.push_back(item("gradient_sum", gradient_sum, gated, 1e-8));
  rep.items.push_back(item("laplacian_square_sum", curv_mean, gated, 1e-8));
  rep.items.push_back(item("laplacian_square_sum_max", curv_max,
                           flat ? ResidualKind::Threshold : ResidualKind::Info, 1e-8));
  rep.items.push_back(item("laplacian_tangential", tang_mean, gated, 1e-8));
  rep.items.push_back(item("laplacian_tangential_max", tang_max,
                           flat ? ResidualKind::Threshold : ResidualKind::Info, 1e-8));
  rep.items.push_back(item("probe_projection", relative(probe_res, probe_scale), gated, 1e-8));
  return rep;
}

ResidualReport check_beta_normalization(const DiagnosticsWorkspace& ws, double t) {
  if (t == 1.0) {
    throw ArgumentError("beta normalization is undefined at t = 1");
  }
  const PowerMoments pm = t == ws.t() ? ws.moments : power_moments(ws, t);
  const double l1 = ws.lambdas[0];
  const double c = pm.c();
  const double target = c * l1 * pm.norm_sq;

  ResidualReport rep{"power_normalization_t" + format_t(t), {}};
  rep.items.push_back(item("energy_identity", relative(pm.energy - target, target), ResidualKind::Trend));

  const Eigen::VectorXd beta = pm.beta(l1);
  double beta_energy = pm.energy / target; // whole-basis sum via the quadratic form
  double beta_tail = (pm.norm_sq - pm.D(0) * pm.D(0)) / target;
  if (ws.complete) {
    beta_energy = 0.0;
    beta_tail = 0.0;
    for (int j = 1; j < ws.mode_count(); ++j) {
      beta_energy += (ws.lambdas[static_cast<std::size_t>(j)] - l1) * beta(j) * beta(j);
      beta_tail += beta(j) * beta(j);
    }
  }
  rep.items.push_back(item("beta_sum", std::abs(beta_energy - 1.0), ResidualKind::Trend));
  const double b2 = pm.brands_ratio() * pm.brands_ratio();
  const double b2_identity = 1.0 / (1.0 - c * l1 * beta_tail);
  rep.items.push_back(item("ratio_identity", relative(b2 - b2_identity, b2), ResidualKind::Threshold, 1e-8));
  return rep;
}

ResidualReport check_brands_dominance(const DiagnosticsWorkspace& ws, const std::vector<double>& ts) {
  ResidualReport rep{"trial_ratio_bound", {}};
  require_modes(ws, 2, "trial ratio bound");
  const double a = ws.lambda(2) / ws.lambda(1);
  for (double t : ts) {
    if (!(t >= 1.0) || !(t < t_pole(a))) continue;
    const PowerMoments pm = t == ws.t() ? ws.moments : power_moments(ws, t);
    const double bound = brands_Bt_bound({a, 0.0, t});
    rep.items.push_back(item("excess_t" + format_t(t), std::max(0.0, pm.brands_ratio() - bound) / bound,
                             ResidualKind::Trend));
  }
  return rep;
}

BoundRow proposition21_eval(const DiagnosticsWorkspace& ws, int k, int l, double t) {
  if (k < 1 || l < 1) throw ArgumentError("k and l must be at least 1");
  require_modes(ws, std::max(k, l) + 1, "trial-power gap bound");
  const PowerMoments pm = t == ws.t() ? ws.moments : power_moments(ws, t);
  const double l1 = ws.lambda(1);
  const auto [best, alpha0] = weighted_gap_max(ws, k);
  const double lhs = ws.n * (ws.lambda(k + 1) - l1) / (1.0 + best);

  const Eigen::VectorXd gamma = pm.scaled_beta_sq(l1);
  double tail = pm.c();
  for (int j = 2; j <= l; ++j) tail += (ws.lambda(l + 1) - ws.lambda(j)) * gamma(j - 1);
  const double den = 1.0 - l1 / (ws.lambda(l + 1) - l1) * tail;
  const double h = ws.n * ws.n * ws.sup_h_sq;

  std::ostringstream note;
  note << "alpha0=" << alpha0 << " t=" << format_t(t);
  if (!(den > 0.0)) {
    BoundRow row = make_row("gap_trial_power", k, l, lhs, kInf, Applicability::Inapplicable);
    note << " denominator nonpositive";
    row.note = note.str();
    return row;
  }
  const double rhs =
      std::sqrt((h + 4.0 * l1) * (h + (1.0 + t) * (1.0 + t) / (2.0 * t - 1.0) * l1) / den);
  BoundRow row = make_row("gap_trial_power", k, l, lhs, rhs);
  row.note = note.str();
  return row;
}

ResidualReport minimal_case_checks(const DiagnosticsWorkspace& ws, const ImmersedChart& chart) {
  if (!is_minimal_chart(chart)) {
    throw ArgumentError("minimal-case checks need a minimal chart (|H| = 0)");
  }
  const double t = ws.t();
  if (t == 1.0) throw ArgumentError("minimal-case checks need t != 1");
  ResidualReport rep{"minimal_identities", {}};
  const double l1 = ws.lambdas[0];

  rep.items.push_back(item("laplacian_coefficients", ws.C.cwiseAbs().maxCoeff(),
                           ws.flat ? ResidualKind::Threshold : ResidualKind::Trend, 1e-8));

  const PowerMoments& pm = ws.moments;
  double orth = 0.0;
  for (int alpha = 0; alpha < ws.N; ++alpha) {
    const double scale = std::sqrt(pm.energy * ws.zu_energy(alpha));
    if (scale > 0.0) orth = std::max(orth, std::abs(pm.cross(alpha)) / scale);
  }
  rep.items.push_back(item("orthogonality", orth, ResidualKind::Trend));

  const Eigen::VectorXd beta = pm.beta(l1);
  double worst = -kInf;
  for (int alpha = 1; alpha <= ws.N; ++alpha) {
    for (int j = 2; j <= ws.mode_count(); ++j) {
      const double gap = ws.lambda(j) - l1;
      worst = std::max(worst, gap * beta(j - 1) * beta(j - 1) + gap * ws.weighted_a_sq(alpha, j));
    }
  }
  rep.items.push_back(item("pointwise_bound_max", worst, ResidualKind::Info));
  rep.items.push_back(item("pointwise_bound_excess", std::max(0.0, worst - 1.0), ResidualKind::Trend));
  return rep;
}

Eigen::VectorXd sigma_values(const DiagnosticsWorkspace& ws, int l) {
  if (l < 1) throw ArgumentError("l must be at least 1");
  require_modes(ws, l + 1, "sigma");
  const double l1 = ws.lambda(1);
  const double top = ws.lambda(l + 1);
  Eigen::VectorXd sigma(ws.N);
  for (int alpha = 1; alpha <= ws.N; ++alpha) {
    double s = 0.0;
    for (int j = 2; j <= l; ++j) {
      const double gap = ws.lambda(j) - l1;
      s += (top - ws.lambda(j)) / gap * (1.0 - gap * ws.weighted_a_sq(alpha, j));
    }
    sigma(alpha - 1) = l1 + (top - l1) / (1.0 + s);
  }
  return sigma;
}

BoundReport theorem31_eval(const DiagnosticsWorkspace& ws, int k, int l) {
  if (k < 1) throw ArgumentError("k must be at least 1");
  require_modes(ws, std::max(k, l) + 1, "minimal gap bound");
  const double n = ws.n;
  const double l1 = ws.lambda(1);
  const double top = ws.lambda(k + 1);
  const Eigen::VectorXd sigma = sigma_values(ws, l);
  auto rhs_of = [&](double s) { return 3.0 * l1 + l1 * l1 / s; };

  double total = 0.0;
  for (int alpha = 1; alpha <= ws.N; ++alpha) {
    for (int j = alpha + 1; j <= k; ++j) {
      const double a = ws.A(alpha - 1, j - 1);
      total += (top - ws.lambda(j)) * a * a;
    }
  }
  const double lhs_all = n * n * (top - l1) / (n + total);

  double harmonic = 0.0;
  for (int j = 2; j <= k; ++j) harmonic += (top - ws.lambda(j)) / (ws.lambda(j) - l1);
  const double chain_left = n * (top - l1) / (1.0 + harmonic);

  BoundReport rows;
  for (int alpha = 1; alpha <= ws.N; ++alpha) {
    BoundRow row = make_row("minimal_gap_alpha", k, l, lhs_all, rhs_of(sigma(alpha - 1)));
    row.note = "alpha=" + std::to_string(alpha);
    rows.push_back(std::move(row));
  }

  const auto [best, alpha0] = weighted_gap_max(ws, k);
  BoundRow selected =
      make_row("minimal_gap_selected", k, l, n * (top - l1) / (1.0 + best), rhs_of(sigma(alpha0 - 1)));
  selected.note = "alpha0=" + std::to_string(alpha0);
  rows.push_back(std::move(selected));

  for (int alpha = 1; alpha <= ws.N; ++alpha) {
    const double s = sigma(alpha - 1);
    BoundRow left = make_row("minimal_gap_chain", k, l, chain_left, rhs_of(s));
    left.note = "alpha=" + std::to_string(alpha);
    rows.push_back(std::move(left));

    const double t = 2.0 * s / (s + l1);
    std::ostringstream note;
    note << "alpha=" << alpha << " t=" << format_t(t);
    if (!(t > 0.5) || !(t < 2.0) || t == 1.0) {
      BoundRow row = make_row("minimal_gap_chain_trial", k, l, chain_left, kInf, Applicability::Inapplicable);
      note << " outside (1/2, 2) or at 1";
      row.note = note.str();
      rows.push_back(std::move(row));
      continue;
    }
    const Eigen::VectorXd beta = power_moments(ws, t).beta(l1);
    double mid = 0.0;
    for (int j = 2; j <= k; ++j) {
      mid += (top - ws.lambda(j)) * (1.0 / (ws.lambda(j) - l1) - beta(j - 1) * beta(j - 1));
    }
    BoundRow middle = make_row("minimal_gap_chain_trial", k, l, n * (top - l1) / (1.0 + mid), rhs_of(s));
    middle.note = note.str();
    rows.push_back(std::move(middle));
  }
  return rows;
}

} // namespace spectral
