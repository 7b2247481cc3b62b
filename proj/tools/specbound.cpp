// Copyright the spectral-bounds authors.
// SPDX-License-Identifier: Apache-2.0

// specbound: Dirichlet eigenvalue bounds on meshed and closed-form domains.
//
// Exit codes: 0 when every exact row holds and every diagnostic passes,
// 2 on a violation or a failed pipeline stage, 1 on usage or IO errors.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spectral/analytic.hpp"
#include "spectral/bounds.hpp"
#include "spectral/config.hpp"
#include "spectral/error.hpp"
#include "spectral/harness.hpp"
#include "spectral/spectrum.hpp"

namespace fs = std::filesystem;
using namespace spectral;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kViolation = 2;

struct SolveArgs {
  std::string config;
  std::string out;
};

struct CheckArgs {
  std::string spectrum;
  int n = 2;
  double h0sq = 0.0;
  bool minimal = false;
  std::string geometry;
  int kmax = 3;
};

struct ConvergenceArgs {
  std::string config;
  int levels = 3;
  std::string out;
};

struct OracleArgs {
  std::string domain;
  int n = 2;
  double a = std::numbers::pi;
  double b = std::numbers::pi;
  double radius = 1.0;
  int count = 6;
};

void report_failures(const std::vector<RunReport>& reports) {
  for (const RunReport& r : reports) {
    for (const std::string& f : r.failures()) std::cerr << "FAIL " << f << '\n';
  }
}

int summarize(const std::vector<RunReport>& reports) {
  bool ok = true;
  for (const RunReport& r : reports) {
    std::cout << r.domain_id << ": " << (r.passed() ? "pass" : "FAIL") << '\n';
    ok = ok && r.passed();
  }
  report_failures(reports);
  return ok ? kOk : kViolation;
}

int do_solve(const SolveArgs& args) {
  const RunConfig config = load_config(args.config);
  std::error_code ec;
  fs::create_directories(args.out, ec);
  if (ec) throw IoError("cannot create '" + args.out + "': " + ec.message());

  std::vector<RunReport> reports;
  for (const DomainSpec& d : config.domains) reports.push_back(run(d));

  const fs::path out(args.out);
  emit_report(reports, ReportFormat::Csv, out / "report.csv");
  emit_report(reports, ReportFormat::Json, out / "report.json");
  std::ofstream conv(out / "convergence.csv", std::ios::binary);
  if (!conv) throw IoError("cannot open '" + (out / "convergence.csv").string() + "' for writing");
  write_convergence_csv(conv, reports);
  return summarize(reports);
}

int do_check(const CheckArgs& args) {
  std::ifstream in(args.spectrum);
  if (!in) throw IoError("cannot open spectrum '" + args.spectrum + "'");
  BoundContext ctx;
  ctx.n = args.n;
  ctx.h0_sq = args.h0sq;
  ctx.lambdas = read_spectrum_csv(in);
  if (args.minimal && args.h0sq != 0.0) {
    throw ArgumentError("--minimal requires --h0sq 0");
  }
  if (!args.geometry.empty()) {
    ctx.geometry = geometry_class_from_string(args.geometry);
  } else if (args.minimal) {
    ctx.geometry = GeometryClass::Minimal;
  } else {
    ctx.geometry = args.h0sq == 0.0 ? GeometryClass::Euclidean : GeometryClass::General;
  }
  if (args.minimal && ctx.geometry != GeometryClass::Minimal && ctx.geometry != GeometryClass::Euclidean) {
    throw ArgumentError("--minimal contradicts --geometry " + args.geometry);
  }
  validate(ctx);

  RunReport report;
  report.domain_id = "spectrum";
  report.geometry = ctx.geometry;
  report.n = ctx.n;
  report.analytic = true;
  report.h0_sq = ctx.h0_sq;
  LevelResult lv;
  lv.lambdas = ctx.lambdas;
  lv.h0_sq = ctx.h0_sq;
  lv.bounds = evaluate_all(ctx, args.kmax);
  report.levels.push_back(std::move(lv));

  const std::vector<RunReport> reports{report};
  write_bounds_csv(std::cout, reports);
  report_failures(reports);
  return report.passed() ? kOk : kViolation;
}

int do_convergence(const ConvergenceArgs& args) {
  if (args.levels < 1) throw ArgumentError("--levels must be at least 1");
  RunConfig config = load_config(args.config);
  std::vector<RunReport> reports;
  for (DomainSpec d : config.domains) {
    if (d.geometry.kind == GeometrySpec::Kind::Analytic) continue;
    d.refinements = args.levels - 1;
    d.diagnostics = false;
    reports.push_back(run(d));
  }
  if (args.out.empty()) {
    write_convergence_csv(std::cout, reports);
  } else {
    std::ofstream out(args.out, std::ios::binary);
    if (!out) throw IoError("cannot open '" + args.out + "' for writing");
    write_convergence_csv(out, reports);
  }
  bool ok = true;
  for (const RunReport& r : reports) ok = ok && r.errors.empty();
  for (const RunReport& r : reports) {
    for (const StageError& e : r.errors) {
      std::cerr << "FAIL " << r.domain_id << " level " << e.level << ": " << e.stage << ": " << e.message << '\n';
    }
  }
  return ok ? kOk : kViolation;
}

int do_oracle(const OracleArgs& args) {
  if (args.count < 1) throw ArgumentError("--count must be at least 1");
  AnalyticDomain d;
  d.kind = analytic_kind_from_string(args.domain);
  d.a = args.a;
  d.b = args.b;
  d.n = args.n;
  d.radius = args.radius;
  write_spectrum_csv(std::cout, analytic_spectrum(d, args.count).lambdas);
  return kOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dirichlet eigenvalue bounds on meshed and closed-form domains"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run every domain in a config and write reports");
  solve_cmd->add_option("--config", solve.config, "JSON run config")->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--out", solve.out, "Output directory")->required();

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Evaluate the bounds on an eigenvalue list");
  check_cmd->add_option("--spectrum", check.spectrum, "CSV with index,lambda rows")->required();
  check_cmd->add_option("--n", check.n, "Intrinsic dimension")->required()->check(CLI::PositiveNumber);
  check_cmd->add_option("--h0sq", check.h0sq, "Squared sup of the mean curvature")->required();
  check_cmd->add_flag("--minimal", check.minimal, "Domain lies on a minimal submanifold");
  check_cmd->add_option("--geometry", check.geometry, "euclidean, sphere, minimal or general");
  check_cmd->add_option("--kmax", check.kmax, "Largest k for the gap rows")->required()->check(CLI::PositiveNumber);

  ConvergenceArgs conv;
  auto* conv_cmd = app.add_subcommand("convergence", "Eigenvalue convergence table under refinement");
  conv_cmd->add_option("--config", conv.config, "JSON run config")->required()->check(CLI::ExistingFile);
  conv_cmd->add_option("--levels", conv.levels, "Number of mesh levels")->required();
  conv_cmd->add_option("--out", conv.out, "Write the table here instead of stdout");

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Closed-form spectrum as index,lambda CSV");
  oracle_cmd->add_option("--domain", oracle.domain, "rectangle, ball or hemisphere")
      ->required()
      ->check(CLI::IsMember({"rectangle", "ball", "hemisphere"}));
  oracle_cmd->add_option("--n", oracle.n, "Ball dimension");
  oracle_cmd->add_option("--a", oracle.a, "Rectangle width");
  oracle_cmd->add_option("--b", oracle.b, "Rectangle height");
  oracle_cmd->add_option("--radius", oracle.radius, "Ball radius");
  oracle_cmd->add_option("--count", oracle.count, "Number of eigenvalues")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*solve_cmd) return do_solve(solve);
    if (*check_cmd) return do_check(check);
    if (*conv_cmd) return do_convergence(conv);
    if (*oracle_cmd) return do_oracle(oracle);
  } catch (const std::exception& e) {
    std::cerr << "specbound: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
