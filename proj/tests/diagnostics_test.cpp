// Copyright the spectral-bounds authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "spectral/diagnostics.hpp"
#include "spectral/eigensolve.hpp"
#include "spectral/error.hpp"
#include "spectral/fem.hpp"

using namespace spectral;

namespace {

struct Fixture {
  TriMesh mesh;
  ImmersedChart chart = ImmersedChart::flat("flat", {});
  DiagnosticsWorkspace ws;
};

Fixture make(const ImmersedChart& chart, const Region& region, double h, double t, int modes = 0) {
  Fixture f;
  f.chart = chart;
  f.mesh = mesh_chart(chart, region, h);
  const DirichletSystem sys = apply_dirichlet(assemble(f.mesh, chart), f.mesh);
  const Spectrum s = modes > 0 ? solve_lowest(sys, modes) : solve_all(sys);
  f.ws = build_workspace(f.mesh, chart, s, t);
  return f;
}

Fixture square(double h, double t = 2.0, int modes = 0) {
  const ParamRect r{0.0, std::numbers::pi, 0.0, std::numbers::pi};
  return make(ImmersedChart::flat("sq", r), Region::rectangle(r), h, t, modes);
}

const Fixture& square16() {
  static const Fixture f = square(std::numbers::pi / 16);
  return f;
}

} // namespace

TEST(Workspace, RotationMakesTheCoefficientMatrixTriangular) {
  const DiagnosticsWorkspace& ws = square16().ws;
  EXPECT_TRUE(ws.complete);
  EXPECT_EQ(ws.N, 2);
  EXPECT_LT((ws.q_matrix * ws.q_matrix.transpose() - Eigen::Matrix2d::Identity()).norm(), 1e-13);
  for (int alpha = 1; alpha <= ws.N; ++alpha) {
    for (int j = 1; j <= alpha; ++j) EXPECT_LT(std::abs(ws.A(alpha - 1, j - 1)), 1e-9);
  }
  // The shift makes z_alpha u_1 orthogonal to u_1, which is the j = 1 entry.
  EXPECT_GT(std::abs(ws.A(0, 1)), 1e-3);
}

TEST(Checks, FlatSquareIdentitiesHoldToRoundOff) {
  const Fixture& f = square16();
  const ResidualReport parseval = check_parseval(f.ws);
  EXPECT_LT(parseval.at("norm_expansion").value, 1e-8);
  EXPECT_EQ(parseval.at("norm_expansion").kind, ResidualKind::Threshold);
  EXPECT_TRUE(parseval.thresholds_pass());
  EXPECT_LT(f.ws.C.cwiseAbs().maxCoeff(), 1e-8);
  const ResidualReport grad = check_gradient_bound(f.ws, f.mesh, f.chart);
  EXPECT_LT(grad.at("excess_over_one").value, 1e-8);
  const ResidualReport lemma = check_lemma21(f.mesh, f.chart, f.ws.modes.col(0));
  EXPECT_TRUE(lemma.thresholds_pass());
  EXPECT_LT(lemma.at("gradient_sum").value, 1e-8);
  const ResidualReport minimal = minimal_case_checks(f.ws, f.chart);
  EXPECT_TRUE(minimal.thresholds_pass());
  EXPECT_LT(minimal.at("pointwise_bound_excess").value, 1e-12);
}

TEST(Checks, PowerNormalization) {
  const Fixture& f = square16();
  const ResidualReport r = check_beta_normalization(f.ws, 2.0);
  EXPECT_EQ(r.check, "power_normalization_t2");
  EXPECT_TRUE(r.thresholds_pass());
  EXPECT_LT(r.at("energy_identity").value, 0.05);
  EXPECT_THROW(check_beta_normalization(f.ws, 1.0), ArgumentError);
  EXPECT_NO_THROW(f.ws.moments.beta(f.ws.lambda(1)));
}

TEST(Checks, PowerMomentsAtOneAreTheGroundState) {
  const DiagnosticsWorkspace& ws = square16().ws;
  const PowerMoments pm = power_moments(ws, 1.0);
  EXPECT_NEAR(pm.norm_sq, 1.0, 1e-12);
  EXPECT_NEAR(pm.D(0), 1.0, 1e-12);
  EXPECT_NEAR(pm.energy, 0.0, 1e-10);
  EXPECT_EQ(pm.c(), 0.0);
  EXPECT_TRUE(pm.scaled_beta_sq(ws.lambda(1)).allFinite());
  EXPECT_THROW(pm.beta(ws.lambda(1)), ArgumentError);
  EXPECT_NEAR(pm.brands_ratio(), 1.0, 1e-12);
}

TEST(Checks, TrialRatioStaysBelowBound) {
  const ResidualReport r = check_brands_dominance(square16().ws, {1.0, 1.5, 2.0});
  ASSERT_EQ(r.items.size(), 3u);
  for (const Residual& item : r.items) EXPECT_EQ(item.value, 0.0) << item.name;
}

TEST(Rows, GapBoundsHoldOnTheSquare) {
  const DiagnosticsWorkspace& ws = square16().ws;
  for (int k = 1; k <= 4; ++k) {
    for (int l = 1; l <= 2; ++l) {
      for (double t : {1.0, 1.5, 2.0}) {
        const BoundRow r = proposition21_eval(ws, k, l, t);
        EXPECT_EQ(r.inequality_id, "gap_trial_power");
        EXPECT_TRUE(r.satisfied) << "k=" << k << " l=" << l << " t=" << t;
      }
      for (const BoundRow& r : theorem31_eval(ws, k, l)) {
        if (r.applicability == Applicability::Exact) EXPECT_TRUE(r.satisfied) << r.inequality_id << " " << r.note;
      }
    }
  }
}

TEST(Rows, MinimalGapAtFirstIndexMatchesContinuum) {
  const BoundReport rows = theorem31_eval(square16().ws, 1, 1);
  for (const BoundRow& r : rows) {
    if (r.inequality_id != "minimal_gap_selected") continue;
    EXPECT_NEAR(r.lhs, 6.0, 0.15);
    EXPECT_NEAR(r.rhs, 6.8, 0.1);
    EXPECT_TRUE(r.satisfied);
  }
}

TEST(Rows, SigmaLiesBetweenFirstAndTopEigenvalue) {
  const DiagnosticsWorkspace& ws = square16().ws;
  for (int l = 1; l <= 5; ++l) {
    const Eigen::VectorXd s = sigma_values(ws, l);
    for (int a = 0; a < ws.N; ++a) {
      EXPECT_GE(s(a), ws.lambda(1) - 1e-12);
      EXPECT_LE(s(a), ws.lambda(l + 1) + 1e-12);
    }
  }
}

TEST(Workspace, PartialBasisAgreesWithFullOnLowModes) {
  const Fixture full = square(std::numbers::pi / 16);
  const Fixture part = square(std::numbers::pi / 16, 2.0, 12);
  EXPECT_FALSE(part.ws.complete);
  for (int j = 0; j < 6; ++j) {
    for (int a = 0; a < 2; ++a) {
      // Degenerate pairs may rotate, so compare column norms.
      EXPECT_NEAR(std::abs(full.ws.A(a, j)), std::abs(part.ws.A(a, j)), 1e-6);
    }
  }
  // Whole-basis sums come from quadratic forms and do not depend on the basis.
  EXPECT_NEAR(full.ws.zu_energy(0), part.ws.zu_energy(0), 1e-10);
  EXPECT_NEAR(full.ws.moments.energy, part.ws.moments.energy, 1e-10);
}

TEST(Workspace, CurvedChartsRefineTowardTheIdentities) {
  const auto cap = ImmersedChart::sphere_cap("cap", std::numbers::pi / 2);
  const Region disk = Region::disk(ParamPoint::Zero(), std::numbers::pi / 2);
  const TriMesh coarse = mesh_chart(cap, disk, 0.2);
  const TriMesh fine = refine(coarse);
  const auto probe = [](const TriMesh& m) { return Eigen::VectorXd::Ones(m.vertex_count()).eval(); };
  const ResidualReport a = check_lemma21(coarse, cap, probe(coarse));
  const ResidualReport b = check_lemma21(fine, cap, probe(fine));
  EXPECT_EQ(a.at("laplacian_square_sum").kind, ResidualKind::Trend);
  for (const TrendVerdict& v : compare_levels({a}, {b})) {
    if (v.name == "laplacian_square_sum" || v.name == "gradient_sum") EXPECT_TRUE(v.pass) << v.name;
  }
}

TEST(Trend, RuleUsesFactorAndFloor) {
  const auto rep = [](double v) {
    return std::vector<ResidualReport>{{"c", {{"x", v, ResidualKind::Trend, 0.0}, {"i", 5.0, ResidualKind::Info, 0.0}}}};
  };
  auto v = compare_levels(rep(1.0), rep(0.5));
  ASSERT_EQ(v.size(), 1u);
  EXPECT_TRUE(v[0].pass);
  EXPECT_FALSE(compare_levels(rep(1.0), rep(0.8))[0].pass);
  EXPECT_TRUE(compare_levels(rep(1e-12), rep(1e-12))[0].pass);
  EXPECT_TRUE(compare_levels(rep(1.0), rep(0.8)).size() == 1);
}

TEST(Workspace, RejectsUnusableInputs) {
  const TriMesh m = mesh_rectangle(1.0, 1.0, 0.25);
  const DirichletSystem sys = apply_dirichlet(assemble(m, m.chart), m);
  const Spectrum s = solve_all(sys);
  EXPECT_THROW(build_workspace(m, m.chart, s, 0.5), ArgumentError);
  Spectrum two = solve_lowest(sys, 2);
  EXPECT_THROW(build_workspace(m, m.chart, two, 2.0), ArgumentError);
  const auto cap = ImmersedChart::sphere_cap("cap", 1.0);
  const TriMesh cm = mesh_chart(cap, Region::disk(ParamPoint::Zero(), 1.0), 0.25);
  const DiagnosticsWorkspace ws =
      build_workspace(cm, cap, solve_all(apply_dirichlet(assemble(cm, cap), cm)), 2.0);
  EXPECT_THROW(minimal_case_checks(ws, cap), ArgumentError);
}
