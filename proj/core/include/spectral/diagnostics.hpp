// Copyright the spectral-bounds authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "spectral/bounds.hpp"
#include "spectral/geometry.hpp"
#include "spectral/mesh.hpp"
#include "spectral/spectrum.hpp"

namespace spectral {

/// Moments of the nodal power p = max(u_1, 0)^t paired through the mass
/// matrix. Sums over the whole discrete basis are taken from quadratic forms,
/// so they are available when only a few modes were computed.
struct PowerMoments {
  double t = 1.0;
  Eigen::VectorXd p;        ///< nodal u_1^t
  Eigen::VectorXd D;        ///< D_j = int u_1^t u_j over the available modes
  double norm_sq = 0.0;     ///< int u_1^{2t}
  double energy = 0.0;      ///< sum_j (lambda_j - lambda_1) D_j^2 over the whole basis
  Eigen::VectorXd cross;    ///< per alpha: sum_j (lambda_j - lambda_1) D_j A_{alpha j}
  /// (t-1)^2/(2t-1).
  double c() const { return (t - 1.0) * (t - 1.0) / (2.0 * t - 1.0); }
  /// c beta_j^2 = D_j^2 / (lambda_1 int u_1^{2t}); finite at t = 1.
  Eigen::VectorXd scaled_beta_sq(double lambda1) const;
  /// beta_j; throws ArgumentError at t = 1.
  Eigen::VectorXd beta(double lambda1) const;
  /// B(t) = sqrt(int u^{2t}) / int u^{t+1}.
  double brands_ratio() const { return std::sqrt(norm_sq) / D(0); }
};

/// Discrete counterparts of the Gram-Schmidt construction built from FEM
/// eigenfunctions. Vertex fields are full-length (zero on the boundary for
/// eigenfunctions); L^2 pairings go through the consistent mass matrix.
struct DiagnosticsWorkspace {
  int n = 2;  ///< intrinsic dimension
  int N = 2;  ///< ambient dimension, number of coordinate functions
  bool flat = true;
  bool complete = false; ///< modes span the whole discrete space
  double sup_h_sq = 0.0;

  std::vector<double> lambdas;
  Eigen::MatrixXd modes; ///< V x m, lifted to all vertices
  Eigen::SparseMatrix<double> K; ///< full stiffness
  Eigen::SparseMatrix<double> M; ///< full consistent mass
  Eigen::VectorXd lumped_mass;
  std::vector<char> boundary;

  Eigen::MatrixXd coords;   ///< V x N, y_alpha
  Eigen::MatrixXd q_matrix; ///< N x N orthogonal, rows rotate y
  Eigen::MatrixXd r_matrix; ///< Q a, upper triangular
  Eigen::VectorXd b_shifts;
  Eigen::MatrixXd z_fields; ///< V x N

  Eigen::MatrixXd A; ///< N x m, int z_alpha u_1 u_j
  Eigen::MatrixXd B; ///< N x m, int u_j grad z_alpha . grad u_1
  Eigen::MatrixXd C; ///< N x m, int u_j u_1 Delta_h z_alpha

  Eigen::VectorXd zu_norm_sq;    ///< ||z_alpha u_1||^2
  Eigen::VectorXd zu_energy;     ///< sum_j (lambda_j - lambda_1) A_{alpha j}^2, whole basis
  Eigen::VectorXd grad_weight;   ///< int |grad z_alpha|^2 u_1^2 by quadrature

  PowerMoments moments; ///< at the workspace trial exponent

  int mode_count() const { return static_cast<int>(modes.cols()); }
  double lambda(int j) const { return lambdas.at(static_cast<std::size_t>(j - 1)); }
  double t() const { return moments.t; }
  /// A_{alpha j}^2 / int |grad z_alpha|^2 u_1^2, 0 when the weight vanishes.
  double weighted_a_sq(int alpha, int j) const;
};

/// Requires a FEM spectrum with at least N+1 modes and t > 1/2.
DiagnosticsWorkspace build_workspace(const TriMesh& mesh, const ImmersedChart& chart,
                                     const Spectrum& spec, double t);

PowerMoments power_moments(const DiagnosticsWorkspace& ws, double t);

enum class ResidualKind {
  Threshold, ///< must stay below `threshold` at every level
  Trend,     ///< must shrink under refinement
  Info,      ///< reported only
};

struct Residual {
  std::string name;
  double value = 0.0;
  ResidualKind kind = ResidualKind::Info;
  double threshold = 0.0;
};

struct ResidualReport {
  std::string check;
  std::vector<Residual> items;

  const Residual& at(const std::string& name) const;
  /// True when every Threshold item is below its threshold.
  bool thresholds_pass() const;
};

/// A trend passes when the fine value is at the round-off floor or the
/// coarse/fine ratio is at least kTrendFactor.
inline constexpr double kTrendFactor = 1.5;
inline constexpr double kTrendFloor = 1e-9;

struct TrendVerdict {
  std::string check;
  std::string name;
  double coarse = 0.0;
  double fine = 0.0;
  bool pass = true;
};

std::vector<TrendVerdict> compare_levels(const std::vector<ResidualReport>& coarse,
                                         const std::vector<ResidualReport>& fine);

/// 2B = (lambda_1 - lambda_j) A - C over the lowest modes, relative to the
/// size of the terms.
ResidualReport check_linear_relation(const DiagnosticsWorkspace& ws);

/// ||z u_1||^2 = sum_j A_j^2 (exact with the whole basis) and the weighted
/// gradient identity sum (lambda_j - lambda_1) A_j^2 = int |grad z|^2 u_1^2.
ResidualReport check_parseval(const DiagnosticsWorkspace& ws);

/// Per-element |grad z_alpha|^2 in the induced metric; reports the excess over 1.
ResidualReport check_gradient_bound(const DiagnosticsWorkspace& ws, const TriMesh& mesh,
                                    const ImmersedChart& chart);

/// The four coordinate-function identities of an isometric immersion, with
/// `probe` (a full vertex vector) as the test function for the last one.
ResidualReport check_lemma21(const TriMesh& mesh, const ImmersedChart& chart,
                             const Eigen::VectorXd& probe);

/// Energy identity of u_1^t, the normalized beta sum, and the B(t)^2 identity.
/// Throws ArgumentError at t = 1.
ResidualReport check_beta_normalization(const DiagnosticsWorkspace& ws, double t);

/// Computed B(t) against the trial-function bound at each t.
ResidualReport check_brands_dominance(const DiagnosticsWorkspace& ws, const std::vector<double>& ts);

/// Gap bound with the alpha_0 maximizing the weighted A sum.
BoundRow proposition21_eval(const DiagnosticsWorkspace& ws, int k, int l, double t);

/// Vanishing of C, the orthogonality sum, and the per-(alpha, j) inequality
/// for minimal charts. Throws ArgumentError on a non-minimal chart or t = 1.
ResidualReport minimal_case_checks(const DiagnosticsWorkspace& ws, const ImmersedChart& chart);

/// sigma_{alpha l} for alpha = 1..N.
Eigen::VectorXd sigma_values(const DiagnosticsWorkspace& ws, int l);

/// Minimal-case gap rows: one per alpha, the alpha_0 row, and the chain rows.
BoundReport theorem31_eval(const DiagnosticsWorkspace& ws, int k, int l);

} // namespace spectral
