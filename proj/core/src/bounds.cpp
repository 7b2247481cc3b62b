// Copyright the spectral-bounds authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "spectral/analytic.hpp"
#include "spectral/bounds.hpp"
#include "spectral/error.hpp"

namespace spectral {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Applicability exact_if(bool exact) { return exact ? Applicability::Exact : Applicability::Advisory; }

bool flat_or_minimal(const BoundContext& ctx) {
  return ctx.geometry == GeometryClass::Euclidean || ctx.geometry == GeometryClass::Minimal;
}

void require_eigenvalues(const BoundContext& ctx, int needed, const char* what) {
  if (ctx.count() < needed) {
    std::ostringstream msg;
    msg << what << " needs " << needed << " eigenvalues, got " << ctx.count();
    throw ArgumentError(msg.str());
  }
}

void require_trial(const TrialParams& tp) {
  if (!(tp.a > 1.0)) throw ArgumentError("trial parameter a = lambda_2/lambda_1 must exceed 1");
  if (!(tp.b >= 0.0)) throw ArgumentError("trial parameter b must be nonnegative");
}

} // namespace

std::string to_string(GeometryClass g) {
  switch (g) {
  case GeometryClass::Euclidean: return "euclidean";
  case GeometryClass::Sphere: return "sphere";
  case GeometryClass::Minimal: return "minimal";
  case GeometryClass::General: return "general";
  }
  return "unknown";
}

GeometryClass geometry_class_from_string(const std::string& s) {
  if (s == "euclidean") return GeometryClass::Euclidean;
  if (s == "sphere") return GeometryClass::Sphere;
  if (s == "minimal") return GeometryClass::Minimal;
  if (s == "general") return GeometryClass::General;
  throw ConfigurationError("unknown geometry class '" + s + "'");
}

std::string to_string(Applicability a) {
  switch (a) {
  case Applicability::Exact: return "exact";
  case Applicability::Advisory: return "advisory";
  case Applicability::Inapplicable: return "inapplicable";
  }
  return "unknown";
}

double BoundContext::ratio_sum() const {
  double s = 0.0;
  for (int i = 2; i <= n + 1; ++i) s += lambda(i);
  return s / lambda(1);
}

void validate(const BoundContext& ctx) {
  if (ctx.n < 1) throw ArgumentError("intrinsic dimension n must be at least 1");
  if (!(ctx.h0_sq >= 0.0)) throw ArgumentError("H0^2 must be nonnegative");
  if (ctx.lambdas.empty()) throw ArgumentError("no eigenvalues supplied");
  for (std::size_t i = 0; i < ctx.lambdas.size(); ++i) {
    if (!(ctx.lambdas[i] > 0.0)) throw ArgumentError("eigenvalues must be positive");
    if (i > 0 && ctx.lambdas[i] < ctx.lambdas[i - 1]) {
      throw ArgumentError("eigenvalues must be in ascending order");
    }
  }
}

bool within_slack(double lhs, double rhs) {
  if (rhs == kInf) return true;
  return rhs - lhs >= -kBoundSlack * std::max(1.0, std::abs(rhs));
}

BoundRow make_row(std::string id, std::optional<int> k, std::optional<int> l, double lhs,
                  double rhs, Applicability applicability) {
  BoundRow row;
  row.inequality_id = std::move(id);
  row.k = k;
  row.l = l;
  row.lhs = lhs;
  row.rhs = rhs;
  row.margin = rhs == kInf ? kInf : rhs - lhs;
  row.satisfied = within_slack(lhs, rhs);
  row.applicability = applicability;
  return row;
}

TrialParams trial_params(const BoundContext& ctx, double t) {
  require_eigenvalues(ctx, 2, "trial parameters");
  TrialParams tp;
  tp.a = ctx.lambda(2) / ctx.lambda(1);
  tp.b = ctx.n * ctx.n * ctx.h0_sq / ctx.lambda(1);
  tp.t = t;
  return tp;
}

BoundRow ppw_gap(const BoundContext& ctx, int k) {
  if (k < 1) throw ArgumentError("k must be at least 1");
  require_eigenvalues(ctx, k + 1, "gap bound");
  double sum = 0.0;
  for (int i = 1; i <= k; ++i) sum += ctx.lambda(i);
  return make_row("gap_sum", k, std::nullopt, ctx.lambda(k + 1) - ctx.lambda(k),
                  4.0 / (k * ctx.n) * sum, exact_if(flat_or_minimal(ctx)));
}

BoundRow hile_protter(const BoundContext& ctx, int k) {
  if (k < 1) throw ArgumentError("k must be at least 1");
  require_eigenvalues(ctx, k + 1, "reciprocal-gap bound");
  const double next = ctx.lambda(k + 1);
  double sum = 0.0;
  bool vacuous = false;
  for (int i = 1; i <= k; ++i) {
    const double gap = next - ctx.lambda(i);
    if (gap <= 0.0) {
      vacuous = true;
      break;
    }
    sum += ctx.lambda(i) / gap;
  }
  BoundRow row = make_row("reciprocal_gap", k, std::nullopt, 0.25 * k * ctx.n, vacuous ? kInf : sum,
                          exact_if(flat_or_minimal(ctx)));
  if (vacuous) row.note = "lambda_{k+1} = lambda_k";
  return row;
}

BoundRow yang_type(const BoundContext& ctx, int k, YangVariant variant) {
  if (k < 1) throw ArgumentError("k must be at least 1");
  require_eigenvalues(ctx, k + 1, "quadratic gap bound");
  const double n = ctx.n;
  double term = 0.0;
  std::string id;
  Applicability app = Applicability::Exact;
  switch (variant) {
  case YangVariant::Euclidean:
    id = "quadratic_gap_flat";
    app = exact_if(flat_or_minimal(ctx));
    break;
  case YangVariant::Sphere:
    id = "quadratic_gap_sphere";
    term = n * n / 4.0;
    app = exact_if(ctx.geometry == GeometryClass::Sphere);
    break;
  case YangVariant::General:
    id = "quadratic_gap_mean_curvature";
    term = n * n * ctx.h0_sq / 4.0;
    break;
  }
  const double next = ctx.lambda(k + 1);
  double lhs = 0.0;
  double rhs = 0.0;
  for (int i = 1; i <= k; ++i) {
    const double gap = next - ctx.lambda(i);
    lhs += gap * gap;
    rhs += gap * (ctx.lambda(i) + term);
  }
  return make_row(std::move(id), k, std::nullopt, lhs, 4.0 / n * rhs, app);
}

double ball_ratio(int n) {
  if (n < 2) throw ArgumentError("ball ratio needs n >= 2");
  const double hi = bessel_zero(0.5 * n, 1);
  const double lo = bessel_zero(0.5 * n - 1.0, 1);
  return (hi * hi) / (lo * lo);
}

BoundReport lower_order_suite(const BoundContext& ctx) {
  const int n = ctx.n;
  require_eigenvalues(ctx, n + 1, "lower-order bounds");
  const double l1 = ctx.lambda(1);
  const double s = ctx.ratio_sum();
  const bool flat = ctx.geometry == GeometryClass::Euclidean;

  BoundReport rows;
  rows.push_back(make_row("ratio_sum_n_plus_4", std::nullopt, std::nullopt, s, n + 4.0,
                          exact_if(flat_or_minimal(ctx))));
  rows.push_back(make_row("ratio_sum_flat", std::nullopt, std::nullopt, s,
                          n + 3.0 + l1 / ctx.lambda(2), exact_if(flat)));

  // At least one of the two branches holds for each j = 1..n+2.
  for (int j = 1; j <= n + 2 && j <= ctx.count(); ++j) {
    const double ratio_rhs = 2.0 - l1 / ctx.lambda(j);
    const double ratio_lhs = ctx.lambda(2) / l1;
    const bool first = ratio_lhs < ratio_rhs;
    const double sum_rhs = n + 3.0 + l1 / ctx.lambda(j);
    const bool second = within_slack(s, sum_rhs);
    BoundRow row = (first && !second)
                       ? make_row("two_branch", j, std::nullopt, ratio_lhs, ratio_rhs, exact_if(flat))
                       : make_row("two_branch", j, std::nullopt, s, sum_rhs, exact_if(flat));
    row.satisfied = first || second;
    row.note = first && second ? "both" : first ? "ratio_branch" : second ? "sum_branch" : "neither";
    rows.push_back(std::move(row));
  }

  rows.push_back(make_row("ratio_sum_sphere", std::nullopt, std::nullopt, s,
                          n + 4.0 + n * n / l1, exact_if(ctx.geometry == GeometryClass::Sphere)));
  rows.push_back(make_row("ratio_sum_mean_curvature", std::nullopt, std::nullopt, s,
                          n + 4.0 + n * n * ctx.h0_sq / l1));
  if (n >= 2) {
    const double ball = ball_ratio(n);
    BoundRow ratio = make_row("ball_ratio", std::nullopt, std::nullopt, ctx.lambda(2) / l1, ball,
                              Applicability::Advisory);
    ratio.note = "attained by the ball; discretization may exceed it";
    rows.push_back(std::move(ratio));
    BoundRow sum = make_row("ball_ratio_sum", std::nullopt, std::nullopt, s, n * ball,
                            Applicability::Advisory);
    sum.note = "conjectured";
    rows.push_back(std::move(sum));
  }
  return rows;
}

double theorem21_rhs(int n, const TrialParams& tp) {
  require_trial(tp);
  const double a = tp.a;
  const double b = tp.b;
  const double inner = std::sqrt((3.0 + 1.0 / a + b / a) * (3.0 + 1.0 / a + b / a) +
                                 4.0 * (1.0 - 1.0 / a) * (b / a));
  const double bracket = (2.0 - 1.0 / a) * b + 3.0 + 1.0 / a + inner;
  return n + std::sqrt((b + 4.0) * bracket / 2.0);
}

BoundRow theorem21_bound(const BoundContext& ctx) {
  if (ctx.n < 2) throw ArgumentError("the mean-curvature lower-order bound needs n >= 2");
  require_eigenvalues(ctx, ctx.n + 1, "mean-curvature lower-order bound");
  if (!(ctx.lambda(2) > ctx.lambda(1))) {
    throw ArgumentError("mean-curvature lower-order bound needs lambda_2 > lambda_1");
  }
  return make_row("ratio_sum_mean_curvature_sharp", std::nullopt, std::nullopt, ctx.ratio_sum(),
                  theorem21_rhs(ctx.n, trial_params(ctx)));
}

GapPair remark21_gap(const TrialParams& tp) {
  require_trial(tp);
  const double a = tp.a;
  const double b = tp.b;
  const double inner = std::sqrt((3.0 + 1.0 / a + b / a) * (3.0 + 1.0 / a + b / a) +
                                 4.0 * (1.0 - 1.0 / a) * (b / a));
  return {((2.0 - 1.0 / a) * b + 3.0 + 1.0 / a + inner) / 2.0, b + 4.0};
}

double t_pole(double a) { return a + std::sqrt(a * a - a); }

double f_of_t(const TrialParams& tp) {
  const double t = tp.t;
  const double den = tp.a * (2.0 * t - 1.0) - t * t;
  if (!(den > 0.0)) {
    std::ostringstream msg;
    msg << "f(t) undefined at t = " << t << " (denominator " << den << ")";
    throw DomainError(msg.str());
  }
  return (tp.b * (2.0 * t - 1.0) + (1.0 + t) * (1.0 + t)) / den;
}

double t_star(const TrialParams& tp) {
  require_trial(tp);
  const double a = tp.a;
  const double b = tp.b;
  const double c = a + b - 1.0;
  return (c + std::sqrt(c * c + 8.0 * a * (a + b + 1.0))) / (2.0 * (a + b + 1.0));
}

double f_min_closed(const TrialParams& tp) {
  require_trial(tp);
  const double a = tp.a;
  const double b = tp.b;
  const double c = a + b - 1.0;
  return ((2.0 * a - 1.0) * b + 3.0 * a + 1.0 + std::sqrt(c * c + 8.0 * a * (a + b + 1.0))) /
         (2.0 * a * (a - 1.0));
}

double brands_Bt_bound(const TrialParams& tp) {
  require_trial(tp);
  const double t = tp.t;
  if (t == 1.0) return 1.0;
  if (!(t > 1.0) || !(t < t_pole(tp.a))) {
    std::ostringstream msg;
    msg << "trial-function bound needs 1 < t < " << t_pole(tp.a) << ", got " << t;
    throw DomainError(msg.str());
  }
  const double q = 2.0 * t - 1.0;
  return std::sqrt((tp.a - 1.0) * q / (tp.a * q - t * t));
}

BoundReport minimal_submanifold_suite(const BoundContext& ctx) {
  if (ctx.h0_sq != 0.0) {
    throw ArgumentError("minimal-submanifold bounds require H0^2 = 0");
  }
  const int n = ctx.n;
  require_eigenvalues(ctx, n + 1, "minimal-submanifold bounds");
  const double l1 = ctx.lambda(1);
  const double l2 = ctx.lambda(2);
  const double r = l2 / l1;
  const Applicability app = exact_if(flat_or_minimal(ctx));

  BoundReport rows;
  rows.push_back(make_row("minimal_ratio_sum", std::nullopt, std::nullopt, ctx.ratio_sum(),
                          n + 2.0 * std::sqrt(3.0 + l1 / l2), app));
  rows.push_back(make_row("minimal_ratio", std::nullopt, std::nullopt, r,
                          (n + 3.0 + std::sqrt(n * n + 10.0 * n + 9.0)) / (2.0 * n), app));
  rows.push_back(make_row("minimal_ratio_quadratic", std::nullopt, std::nullopt,
                          n * r * r - (n + 3.0) * r - 1.0, 0.0, app));
  rows.push_back(make_row("minimal_gap", 1, 1, n * (l2 - l1), 3.0 * l1 + l1 * l1 / l2, app));
  if (n == 2 && ctx.count() >= 3) {
    const double s = (l2 + ctx.lambda(3)) / l1;
    const struct {
      const char* id;
      double value;
    } historical[] = {
        {"planar_ratio_sum_3_plus_sqrt7", 3.0 + std::sqrt(7.0)},
        {"planar_ratio_sum_5.622", 5.622},
        {"planar_ratio_sum_15_plus_sqrt345", (15.0 + std::sqrt(345.0)) / 6.0},
        {"planar_ratio_sum_5.3507", 5.3507},
    };
    for (const auto& h : historical) {
      rows.push_back(make_row(h.id, std::nullopt, std::nullopt, s, h.value, Applicability::Advisory));
    }
  }
  return rows;
}

BoundReport evaluate_all(const BoundContext& ctx, int kmax) {
  validate(ctx);
  BoundReport rows;
  for (int k = 1; k <= kmax && k + 1 <= ctx.count(); ++k) {
    rows.push_back(ppw_gap(ctx, k));
    rows.push_back(hile_protter(ctx, k));
    rows.push_back(yang_type(ctx, k, YangVariant::Euclidean));
    rows.push_back(yang_type(ctx, k, YangVariant::Sphere));
    rows.push_back(yang_type(ctx, k, YangVariant::General));
  }
  if (ctx.count() >= ctx.n + 1) {
    auto lower = lower_order_suite(ctx);
    rows.insert(rows.end(), lower.begin(), lower.end());
    if (ctx.n >= 2 && ctx.lambda(2) > ctx.lambda(1)) rows.push_back(theorem21_bound(ctx));
    if (ctx.h0_sq == 0.0 && ctx.lambda(2) > ctx.lambda(1)) {
      auto minimal = minimal_submanifold_suite(ctx);
      rows.insert(rows.end(), minimal.begin(), minimal.end());
    }
  }
  return rows;
}

} // namespace spectral
