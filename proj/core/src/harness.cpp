// Copyright the spectral-bounds authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "spectral/eigensolve.hpp"
#include "spectral/error.hpp"
#include "spectral/fem.hpp"
#include "spectral/harness.hpp"

namespace spectral {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool is_minimal(ChartKind kind) {
  return kind == ChartKind::Flat || kind == ChartKind::Catenoid || kind == ChartKind::Helicoid;
}

/// Runs `body`; on a library or standard exception records the stage and
/// returns false.
template <class F>
bool guarded(RunReport& report, const char* stage, int level, F&& body) {
  try {
    body();
    return true;
  } catch (const std::exception& e) {
    report.errors.push_back({stage, level, e.what()});
    return false;
  }
}

double analytic_h0_sq(const AnalyticDomain& d) {
  return d.kind == AnalyticDomain::Kind::Hemisphere ? 1.0 : 0.0;
}

double policy_h0_sq(const H0Policy& policy, double computed) {
  switch (policy.kind) {
  case H0Policy::Kind::Zero: return 0.0;
  case H0Policy::Kind::Explicit: return policy.value;
  case H0Policy::Kind::Computed: return computed < kMeanCurvatureFloor ? 0.0 : computed;
  }
  return computed;
}

/// Workspace exponent: the first requested t that is not 1, else 2.
double workspace_t(const std::vector<double>& ts) {
  for (double t : ts) {
    if (t != 1.0) return t;
  }
  return 2.0;
}

DiagnosticsLevel run_diagnostics(const DomainSpec& spec, const TriMesh& mesh, const ImmersedChart& chart,
                                 const DirichletSystem& sys, int level) {
  DiagnosticsLevel out;
  out.level = level;
  const int N = mesh.ambient_dim();
  Spectrum full;
  if (sys.dimension() <= kDiagnosticsFullBasisLimit) {
    full = solve_all(sys);
  } else {
    const int m = std::max({spec.eigen_count, spec.kmax + 1, spec.lmax + 1, N + 1, 12});
    full = solve_lowest(sys, std::min(m, sys.dimension()));
  }
  out.complete = full.complete;
  out.t = workspace_t(spec.diagnostics_t);
  const DiagnosticsWorkspace ws = build_workspace(mesh, chart, full, out.t);

  out.reports.push_back(check_linear_relation(ws));
  out.reports.push_back(check_parseval(ws));
  out.reports.push_back(check_gradient_bound(ws, mesh, chart));
  out.reports.push_back(check_lemma21(mesh, chart, ws.modes.col(0)));
  for (double t : spec.diagnostics_t) {
    if (t != 1.0) out.reports.push_back(check_beta_normalization(ws, t));
  }
  ResidualReport trial = check_brands_dominance(ws, spec.diagnostics_t);
  const double a = ws.lambda(2) / ws.lambda(1);
  ResidualReport at_star = check_brands_dominance(ws, {t_star({a, 0.0, 1.0})});
  for (Residual r : at_star.items) {
    r.name = "excess_t_star";
    trial.items.push_back(r);
  }
  out.reports.push_back(std::move(trial));
  const bool minimal = is_minimal(chart.kind());
  if (minimal) out.reports.push_back(minimal_case_checks(ws, chart));

  for (int k = 1; k <= spec.kmax; ++k) {
    for (int l = 1; l <= spec.lmax; ++l) {
      for (double t : spec.diagnostics_t) out.rows.push_back(proposition21_eval(ws, k, l, t));
      if (minimal) {
        for (BoundRow& row : theorem31_eval(ws, k, l)) out.rows.push_back(std::move(row));
      }
    }
  }
  return out;
}

std::vector<ConvergenceRow> convergence_table(const DomainSpec& spec, const std::vector<LevelResult>& levels) {
  std::vector<ConvergenceRow> rows;
  if (levels.empty()) return rows;
  std::size_t count = levels.front().lambdas.size();
  for (const LevelResult& lv : levels) count = std::min(count, lv.lambdas.size());
  const auto exact = reference_spectrum(spec.geometry, static_cast<int>(count));
  for (std::size_t i = 0; i < count; ++i) {
    ConvergenceRow row;
    row.index = static_cast<int>(i) + 1;
    if (exact) row.exact = (*exact)[i];
    for (const LevelResult& lv : levels) row.values.push_back(lv.lambdas[i]);
    for (std::size_t L = 0; L < levels.size(); ++L) {
      std::optional<double> order;
      if (row.exact && L >= 1) {
        const double e0 = std::abs(row.values[L - 1] - *row.exact);
        const double e1 = std::abs(row.values[L] - *row.exact);
        if (e0 > 0.0 && e1 > 0.0) order = std::log2(e0 / e1);
      } else if (!row.exact && L >= 2) {
        const double d0 = std::abs(row.values[L - 1] - row.values[L - 2]);
        const double d1 = std::abs(row.values[L] - row.values[L - 1]);
        if (d0 > 0.0 && d1 > 0.0) order = std::log2(d0 / d1);
      }
      row.order.push_back(order);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void run_analytic(const DomainSpec& spec, RunReport& report) {
  LevelResult lv;
  const int n = spec.geometry.intrinsic_dim();
  if (!guarded(report, "solve", 0, [&] {
        lv.lambdas = analytic_spectrum(spec.geometry.analytic, spec.eigen_count).lambdas;
      })) {
    return;
  }
  lv.h = 0.0;
  lv.h0_sq = policy_h0_sq(spec.h0_sq, analytic_h0_sq(spec.geometry.analytic));
  guarded(report, "bounds", 0, [&] {
    lv.bounds = evaluate_all({n, lv.h0_sq, lv.lambdas, spec.geometry_class()}, spec.kmax);
  });
  report.h0_sq = lv.h0_sq;
  report.levels.push_back(std::move(lv));
}

void run_chart(const DomainSpec& spec, RunReport& report) {
  ImmersedChart chart = ImmersedChart::flat("flat", {});
  TriMesh mesh;
  const int n = spec.geometry.intrinsic_dim();
  const int last = spec.refinements;
  for (int level = 0; level <= last; ++level) {
    const auto start = Clock::now();
    const bool meshed = guarded(report, "mesh", level, [&] {
      if (level == 0) {
        chart = spec.geometry.make_chart(spec.domain_id);
        mesh = mesh_chart(chart, spec.geometry.region, spec.h);
      } else {
        mesh = refine(mesh);
      }
    });
    if (!meshed) return;

    DirichletSystem sys;
    if (!guarded(report, "assemble", level, [&] { sys = apply_dirichlet(assemble(mesh, chart), mesh); })) {
      return;
    }

    LevelResult lv;
    lv.level = level;
    lv.h = mesh.h;
    lv.vertices = mesh.vertex_count();
    lv.dofs = sys.dimension();
    Spectrum spectrum;
    if (!guarded(report, "solve", level, [&] {
          spectrum = solve_lowest(sys, std::min(spec.eigen_count, sys.dimension()));
          lv.max_residual = max_relative_residual(sys, spectrum);
        })) {
      return;
    }
    lv.lambdas = spectrum.lambdas;
    lv.h0_sq = policy_h0_sq(spec.h0_sq, sup_mean_curvature_sq(chart, mesh));
    guarded(report, "bounds", level, [&] {
      lv.bounds = evaluate_all({n, lv.h0_sq, lv.lambdas, spec.geometry_class()}, spec.kmax);
    });

    if (spec.diagnostics && level >= last - 1) {
      guarded(report, "diagnostics", level,
              [&] { report.diagnostics.push_back(run_diagnostics(spec, mesh, chart, sys, level)); });
    }
    lv.seconds = seconds_since(start);
    report.h0_sq = lv.h0_sq;
    report.levels.push_back(std::move(lv));
  }
}

} // namespace

std::optional<std::vector<double>> reference_spectrum(const GeometrySpec& geometry, int count) {
  if (count <= 0) return std::vector<double>{};
  if (geometry.kind == GeometrySpec::Kind::Analytic) {
    return analytic_spectrum(geometry.analytic, count).lambdas;
  }
  switch (geometry.chart) {
  case ChartKind::Flat:
    if (geometry.region.kind == Region::Kind::Rectangle) {
      return rectangle_spectrum(geometry.region.rect.width(), geometry.region.rect.height(), count).lambdas;
    } else {
      std::vector<double> v = ball_spectrum(2, count).lambdas;
      const double r2 = geometry.region.radius * geometry.region.radius;
      for (double& x : v) x /= r2;
      return v;
    }
  case ChartKind::SphereCap: {
    const bool hemisphere = std::abs(geometry.shape - std::numbers::pi / 2.0) < 1e-12 &&
                            geometry.region.kind == Region::Kind::Disk &&
                            geometry.region.center.norm() < 1e-12 &&
                            std::abs(geometry.region.radius - geometry.shape) < 1e-12;
    if (hemisphere) return hemisphere_spectrum(count).lambdas;
    return std::nullopt;
  }
  case ChartKind::Catenoid:
  case ChartKind::Helicoid: return std::nullopt;
  }
  return std::nullopt;
}

RunReport run(const DomainSpec& spec) {
  const auto start = Clock::now();
  RunReport report;
  report.domain_id = spec.domain_id;
  report.geometry = spec.geometry_class();
  report.n = spec.geometry.intrinsic_dim();
  report.analytic = spec.geometry.kind == GeometrySpec::Kind::Analytic;

  if (report.analytic) {
    run_analytic(spec, report);
  } else {
    run_chart(spec, report);
    report.convergence = convergence_table(spec, report.levels);
    if (report.diagnostics.size() >= 2) {
      const auto& d = report.diagnostics;
      report.trends = compare_levels(d[d.size() - 2].reports, d.back().reports);
    }
  }
  report.seconds = seconds_since(start);
  return report;
}

std::vector<std::string> RunReport::failures() const {
  std::vector<std::string> out;
  auto row_failures = [&](const BoundReport& rows, int level) {
    for (const BoundRow& r : rows) {
      if (r.applicability == Applicability::Exact && !r.satisfied) {
        std::ostringstream s;
        s << domain_id << " level " << level << ": " << r.inequality_id;
        if (r.k) s << " k=" << *r.k;
        if (r.l) s << " l=" << *r.l;
        s << " violated (lhs " << format_number(r.lhs) << ", rhs " << format_number(r.rhs) << ")";
        out.push_back(s.str());
      }
    }
  };
  for (const StageError& e : errors) {
    out.push_back(domain_id + " level " + std::to_string(e.level) + ": " + e.stage + " failed: " + e.message);
  }
  for (const LevelResult& lv : levels) row_failures(lv.bounds, lv.level);
  for (const DiagnosticsLevel& d : diagnostics) {
    row_failures(d.rows, d.level);
    for (const ResidualReport& rep : d.reports) {
      for (const Residual& r : rep.items) {
        if (r.kind == ResidualKind::Threshold && !(r.value <= r.threshold)) {
          out.push_back(domain_id + " level " + std::to_string(d.level) + ": " + rep.check + "." + r.name +
                        " = " + format_number(r.value) + " exceeds " + format_number(r.threshold));
        }
      }
    }
  }
  for (const TrendVerdict& t : trends) {
    if (!t.pass) {
      out.push_back(domain_id + ": " + t.check + "." + t.name + " did not decrease (" +
                    format_number(t.coarse) + " -> " + format_number(t.fine) + ")");
    }
  }
  return out;
}

bool RunReport::passed() const { return failures().empty(); }

} // namespace spectral
