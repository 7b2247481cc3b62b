// Copyright the spectral-bounds authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "spectral/bounds.hpp"
#include "spectral/config.hpp"
#include "spectral/diagnostics.hpp"

namespace spectral {

/// Reduced dimension up to which diagnostics use the complete discrete basis.
inline constexpr int kDiagnosticsFullBasisLimit = 1200;
/// H0^2 values below this are round-off from a minimal immersion and count as 0.
inline constexpr double kMeanCurvatureFloor = 1e-20;

struct LevelResult {
  int level = 0;
  double h = 0.0;
  int vertices = 0;
  int dofs = 0;
  double h0_sq = 0.0;
  std::vector<double> lambdas;
  double max_residual = 0.0;
  BoundReport bounds;
  double seconds = 0.0;
};

struct DiagnosticsLevel {
  int level = 0;
  bool complete = false;
  double t = 2.0;
  std::vector<ResidualReport> reports;
  BoundReport rows;
};

struct StageError {
  std::string stage;
  int level = 0;
  std::string message;
};

/// Eigenvalue i across levels; `exact` when a closed form exists. The observed
/// order compares errors against the exact value when available, else
/// successive differences.
struct ConvergenceRow {
  int index = 0;
  std::optional<double> exact;
  std::vector<double> values;
  std::vector<std::optional<double>> order;
};

struct RunReport {
  std::string domain_id;
  GeometryClass geometry = GeometryClass::Euclidean;
  int n = 2;
  bool analytic = false;
  double h0_sq = 0.0; ///< at the finest level
  std::vector<LevelResult> levels;
  std::vector<DiagnosticsLevel> diagnostics;
  std::vector<TrendVerdict> trends;
  std::vector<ConvergenceRow> convergence;
  std::vector<StageError> errors;
  double seconds = 0.0;

  /// Every exact row satisfied, every threshold and trend met, no stage errors.
  bool passed() const;
  /// Human-readable reasons for a failed run.
  std::vector<std::string> failures() const;
};

/// Runs mesh, assembly, eigensolve and bounds at each refinement level, and
/// diagnostics on the last two levels. Stage errors are recorded, not thrown.
RunReport run(const DomainSpec& spec);

/// Closed-form spectrum the geometry converges to, if known.
std::optional<std::vector<double>> reference_spectrum(const GeometrySpec& geometry, int count);

/// `domain_id,level,inequality_id,k,l,lhs,rhs,margin,satisfied,applicability`.
void write_bounds_csv(std::ostream& out, const std::vector<RunReport>& reports);
/// `domain_id,index,level,value,exact,observed_order`.
void write_convergence_csv(std::ostream& out, const std::vector<RunReport>& reports);
nlohmann::ordered_json to_json(const RunReport& report);
void write_report_json(std::ostream& out, const std::vector<RunReport>& reports);

enum class ReportFormat { Csv, Json };
/// Writes the reports to `path`; throws IoError when the file cannot be written.
void emit_report(const std::vector<RunReport>& reports, ReportFormat format,
                 const std::filesystem::path& path);

/// printf("%.12g") of a value; "inf"/"-inf"/"nan" for non-finite values.
std::string format_number(double v);

} // namespace spectral
