// Copyright the spectral-bounds authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace spectral {

/// Declared geometry of the domain's ambient manifold. Decides which rows are
/// theorems for the domain (exact) and which are context only (advisory).
enum class GeometryClass {
  Euclidean, ///< flat domain in R^n
  Sphere,    ///< domain in the unit sphere
  Minimal,   ///< domain on a minimal submanifold of R^N
  General,   ///< any other immersed manifold
};

std::string to_string(GeometryClass g);
GeometryClass geometry_class_from_string(const std::string& s);

enum class Applicability {
  Exact,        ///< a proved inequality for this geometry; violations fail a run
  Advisory,     ///< informational only
  Inapplicable, ///< the bound is vacuous for these inputs
};

std::string to_string(Applicability a);

struct BoundContext {
  int n = 2;
  double h0_sq = 0.0; ///< stored raw, combined only as n^2 H0^2 / lambda
  std::vector<double> lambdas;
  GeometryClass geometry = GeometryClass::Euclidean;

  /// lambda_i with 1-based i.
  double lambda(int i) const { return lambdas.at(static_cast<std::size_t>(i - 1)); }
  int count() const { return static_cast<int>(lambdas.size()); }
  /// (lambda_2 + ... + lambda_{n+1}) / lambda_1.
  double ratio_sum() const;
};

/// Validates ordering, positivity and n >= 1; throws ArgumentError.
void validate(const BoundContext& ctx);

struct BoundRow {
  std::string inequality_id;
  std::optional<int> k;
  std::optional<int> l;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0; ///< rhs - lhs
  bool satisfied = true;
  Applicability applicability = Applicability::Exact;
  std::string note;
};

using BoundReport = std::vector<BoundRow>;

/// Relative slack absorbing float noise on exact ties.
inline constexpr double kBoundSlack = 1e-10;

/// Builds a row with margin = rhs - lhs and the slack-tolerant verdict.
BoundRow make_row(std::string id, std::optional<int> k, std::optional<int> l, double lhs,
                  double rhs, Applicability applicability = Applicability::Exact);

bool within_slack(double lhs, double rhs);

/// a = lambda_2/lambda_1, b = n^2 H0^2 / lambda_1, t the trial exponent.
struct TrialParams {
  double a = 2.0;
  double b = 0.0;
  double t = 1.0;
};

TrialParams trial_params(const BoundContext& ctx, double t = 1.0);

enum class YangVariant { Euclidean, Sphere, General };

/// lambda_{k+1} - lambda_k <= (4/(kn)) sum_{i<=k} lambda_i.
BoundRow ppw_gap(const BoundContext& ctx, int k);

/// kn/4 <= sum_{i<=k} lambda_i / (lambda_{k+1} - lambda_i). Orientation is
/// normalized: lhs = kn/4, rhs = the sum, +inf when lambda_{k+1} = lambda_k.
BoundRow hile_protter(const BoundContext& ctx, int k);

/// sum (lambda_{k+1}-lambda_i)^2 <= (4/n) sum (lambda_{k+1}-lambda_i)(lambda_i + term)
/// with term 0, n^2/4 or n^2 H0^2/4.
BoundRow yang_type(const BoundContext& ctx, int k, YangVariant variant);

/// Ratio-sum rows, the two-branch alternative for j = 1..n+2, and the ball
/// reference rows.
BoundReport lower_order_suite(const BoundContext& ctx);

/// The mean-curvature lower-order bound on (lambda_2+...+lambda_{n+1})/lambda_1.
BoundRow theorem21_bound(const BoundContext& ctx);
double theorem21_rhs(int n, const TrialParams& tp);

struct GapPair {
  double lhs = 0.0;
  double rhs = 0.0;
};

/// Half the inner bracket of the mean-curvature bound against b + 4; lhs < rhs.
GapPair remark21_gap(const TrialParams& tp);

/// (b(2t-1) + (1+t)^2) / (a(2t-1) - t^2).
double f_of_t(const TrialParams& tp);
/// Minimizer of f over t >= 1.
double t_star(const TrialParams& tp);
/// Closed form of f(t_star).
double f_min_closed(const TrialParams& tp);
/// Upper end of the interval on which the f denominator is positive.
double t_pole(double a);

/// sqrt((a-1)(2t-1) / (a(2t-1) - t^2)); 1 at t = 1.
double brands_Bt_bound(const TrialParams& tp);

/// Rows valid for minimal submanifolds (H0 = 0). Throws ArgumentError when
/// h0_sq != 0.
BoundReport minimal_submanifold_suite(const BoundContext& ctx);

/// Every row the context has eigenvalues for, in a fixed order.
BoundReport evaluate_all(const BoundContext& ctx, int kmax);

/// lambda_2 / lambda_1 of the unit ball in R^n.
double ball_ratio(int n);

} // namespace spectral
