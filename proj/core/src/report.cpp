// Copyright the spectral-bounds authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "spectral/error.hpp"
#include "spectral/harness.hpp"

namespace spectral {

using nlohmann::ordered_json;

namespace {

/// Finite values rounded to 12 significant digits; non-finite ones as strings.
ordered_json num(double v) {
  if (!std::isfinite(v)) return format_number(v);
  return std::stod(format_number(v));
}

ordered_json num_list(const std::vector<double>& v) {
  ordered_json out = ordered_json::array();
  for (double x : v) out.push_back(num(x));
  return out;
}

std::string to_string(ResidualKind kind) {
  switch (kind) {
  case ResidualKind::Threshold: return "threshold";
  case ResidualKind::Trend: return "trend";
  case ResidualKind::Info: return "info";
  }
  return "info";
}

ordered_json row_json(const BoundRow& r) {
  ordered_json out;
  out["inequality_id"] = r.inequality_id;
  out["k"] = r.k ? ordered_json(*r.k) : ordered_json(nullptr);
  out["l"] = r.l ? ordered_json(*r.l) : ordered_json(nullptr);
  out["lhs"] = num(r.lhs);
  out["rhs"] = num(r.rhs);
  out["margin"] = num(r.margin);
  out["satisfied"] = r.satisfied;
  out["applicability"] = to_string(r.applicability);
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

ordered_json rows_json(const BoundReport& rows) {
  ordered_json out = ordered_json::array();
  for (const BoundRow& r : rows) out.push_back(row_json(r));
  return out;
}

void csv_row(std::ostream& out, const std::string& id, int level, const BoundRow& r) {
  out << id << ',' << level << ',' << r.inequality_id << ',';
  if (r.k) out << *r.k;
  out << ',';
  if (r.l) out << *r.l;
  out << ',' << format_number(r.lhs) << ',' << format_number(r.rhs) << ',' << format_number(r.margin) << ','
      << (r.satisfied ? "true" : "false") << ',' << to_string(r.applicability) << '\n';
}

} // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_bounds_csv(std::ostream& out, const std::vector<RunReport>& reports) {
  out << "domain_id,level,inequality_id,k,l,lhs,rhs,margin,satisfied,applicability\n";
  for (const RunReport& rep : reports) {
    for (const LevelResult& lv : rep.levels) {
      for (const BoundRow& r : lv.bounds) csv_row(out, rep.domain_id, lv.level, r);
    }
    for (const DiagnosticsLevel& d : rep.diagnostics) {
      for (const BoundRow& r : d.rows) csv_row(out, rep.domain_id, d.level, r);
    }
  }
}

void write_convergence_csv(std::ostream& out, const std::vector<RunReport>& reports) {
  out << "domain_id,index,level,value,exact,observed_order\n";
  for (const RunReport& rep : reports) {
    for (const ConvergenceRow& row : rep.convergence) {
      for (std::size_t L = 0; L < row.values.size(); ++L) {
        out << rep.domain_id << ',' << row.index << ',' << L << ',' << format_number(row.values[L]) << ',';
        if (row.exact) out << format_number(*row.exact);
        out << ',';
        if (L < row.order.size() && row.order[L]) out << format_number(*row.order[L]);
        out << '\n';
      }
    }
  }
}

ordered_json to_json(const RunReport& report) {
  ordered_json out;
  out["domain_id"] = report.domain_id;
  out["geometry"] = to_string(report.geometry);
  out["n"] = report.n;
  out["analytic"] = report.analytic;
  out["h0_sq"] = num(report.h0_sq);
  out["passed"] = report.passed();
  out["seconds"] = num(report.seconds);

  ordered_json levels = ordered_json::array();
  for (const LevelResult& lv : report.levels) {
    ordered_json j;
    j["level"] = lv.level;
    j["h"] = num(lv.h);
    j["vertices"] = lv.vertices;
    j["dofs"] = lv.dofs;
    j["h0_sq"] = num(lv.h0_sq);
    j["lambdas"] = num_list(lv.lambdas);
    j["max_residual"] = num(lv.max_residual);
    j["seconds"] = num(lv.seconds);
    j["bounds"] = rows_json(lv.bounds);
    levels.push_back(std::move(j));
  }
  out["levels"] = std::move(levels);

  if (!report.analytic) {
    ordered_json diag = ordered_json::array();
    for (const DiagnosticsLevel& d : report.diagnostics) {
      ordered_json j;
      j["level"] = d.level;
      j["complete"] = d.complete;
      j["t"] = num(d.t);
      ordered_json reps = ordered_json::array();
      for (const ResidualReport& rep : d.reports) {
        ordered_json items = ordered_json::array();
        for (const Residual& r : rep.items) {
          ordered_json item;
          item["name"] = r.name;
          item["value"] = num(r.value);
          item["kind"] = to_string(r.kind);
          if (r.kind == ResidualKind::Threshold) item["threshold"] = num(r.threshold);
          items.push_back(std::move(item));
        }
        reps.push_back({{"check", rep.check}, {"items", std::move(items)}});
      }
      j["reports"] = std::move(reps);
      j["rows"] = rows_json(d.rows);
      diag.push_back(std::move(j));
    }
    ordered_json trends = ordered_json::array();
    for (const TrendVerdict& t : report.trends) {
      trends.push_back({{"check", t.check},
                        {"name", t.name},
                        {"coarse", num(t.coarse)},
                        {"fine", num(t.fine)},
                        {"pass", t.pass}});
    }
    out["diagnostics"] = {{"levels", std::move(diag)}, {"trends", std::move(trends)}};

    ordered_json conv = ordered_json::array();
    for (const ConvergenceRow& row : report.convergence) {
      ordered_json j;
      j["index"] = row.index;
      j["exact"] = row.exact ? num(*row.exact) : ordered_json(nullptr);
      j["values"] = num_list(row.values);
      ordered_json order = ordered_json::array();
      for (const auto& o : row.order) order.push_back(o ? num(*o) : ordered_json(nullptr));
      j["order"] = std::move(order);
      conv.push_back(std::move(j));
    }
    out["convergence"] = std::move(conv);
  }

  ordered_json errors = ordered_json::array();
  for (const StageError& e : report.errors) {
    errors.push_back({{"stage", e.stage}, {"level", e.level}, {"message", e.message}});
  }
  out["errors"] = std::move(errors);
  return out;
}

void write_report_json(std::ostream& out, const std::vector<RunReport>& reports) {
  ordered_json doc;
  doc["reports"] = ordered_json::array();
  for (const RunReport& r : reports) doc["reports"].push_back(to_json(r));
  out << doc.dump(2) << '\n';
}

void emit_report(const std::vector<RunReport>& reports, ReportFormat format, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  if (format == ReportFormat::Csv) {
    write_bounds_csv(out, reports);
  } else {
    write_report_json(out, reports);
  }
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

} // namespace spectral
