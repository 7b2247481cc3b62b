// Copyright the spectral-bounds authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "spectral/config.hpp"
#include "spectral/error.hpp"

namespace spectral {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ConfigurationError(where + ": " + what);
}

void require_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) fail(where, "expected an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : obj.items()) {
    if (!ok.count(key)) fail(where, "unknown key '" + key + "'");
  }
}

double plain_number(const std::string& s, const std::string& whole) {
  if (s.empty()) return 1.0;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ConfigurationError("cannot read number '" + whole + "'");
  }
  if (used != s.size()) throw ConfigurationError("cannot read number '" + whole + "'");
  return v;
}

double scalar_at(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) fail(where, std::string("missing '") + key + "'");
  try {
    return parse_scalar(obj.at(key));
  } catch (const ConfigurationError& e) {
    fail(where + "." + key, e.what());
  }
}

int int_at(const json& obj, const char* key, int fallback, const std::string& where) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_integer()) fail(where + "." + key, "expected an integer");
  return v.get<int>();
}

ParamRect rect_from(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 4) fail(where, "expected [u_min, u_max, v_min, v_max]");
  ParamRect r{parse_scalar(v[0]), parse_scalar(v[1]), parse_scalar(v[2]), parse_scalar(v[3])};
  if (!(r.width() > 0.0) || !(r.height() > 0.0)) fail(where, "rectangle must have positive extent");
  return r;
}

ordered_json rect_to(const ParamRect& r) { return ordered_json::array({r.u_min, r.u_max, r.v_min, r.v_max}); }

Region region_from(const json& v, const std::string& where) {
  require_keys(v, where, {"rectangle", "disk"});
  if (v.contains("rectangle") == v.contains("disk")) fail(where, "give exactly one of 'rectangle' or 'disk'");
  if (v.contains("rectangle")) return Region::rectangle(rect_from(v.at("rectangle"), where + ".rectangle"));
  const json& d = v.at("disk");
  const std::string dw = where + ".disk";
  require_keys(d, dw, {"center", "radius"});
  ParamPoint center = ParamPoint::Zero();
  if (d.contains("center")) {
    const json& c = d.at("center");
    if (!c.is_array() || c.size() != 2) fail(dw + ".center", "expected [u, v]");
    center = {parse_scalar(c[0]), parse_scalar(c[1])};
  }
  const double radius = scalar_at(d, "radius", dw);
  if (!(radius > 0.0)) fail(dw + ".radius", "must be positive");
  return Region::disk(center, radius);
}

ordered_json region_to(const Region& r) {
  ordered_json out;
  if (r.kind == Region::Kind::Rectangle) {
    out["rectangle"] = rect_to(r.rect);
  } else {
    out["disk"] = {{"center", {r.center.x(), r.center.y()}}, {"radius", r.radius}};
  }
  return out;
}

GeometrySpec geometry_from(const json& v, const std::string& where) {
  require_keys(v, where,
               {"chart", "analytic", "region", "domain", "ambient_dim", "theta0", "scale", "pitch", "a",
                "b", "n", "radius"});
  GeometrySpec g;
  if (v.contains("chart") == v.contains("analytic")) fail(where, "give exactly one of 'chart' or 'analytic'");
  if (v.contains("analytic")) {
    g.kind = GeometrySpec::Kind::Analytic;
    g.analytic.kind = analytic_kind_from_string(v.at("analytic").get<std::string>());
    switch (g.analytic.kind) {
    case AnalyticDomain::Kind::Rectangle:
      g.analytic.a = v.contains("a") ? scalar_at(v, "a", where) : std::numbers::pi;
      g.analytic.b = v.contains("b") ? scalar_at(v, "b", where) : std::numbers::pi;
      if (!(g.analytic.a > 0.0) || !(g.analytic.b > 0.0)) fail(where, "rectangle sides must be positive");
      break;
    case AnalyticDomain::Kind::Ball:
      g.analytic.n = int_at(v, "n", 2, where);
      g.analytic.radius = v.contains("radius") ? scalar_at(v, "radius", where) : 1.0;
      if (g.analytic.n < 2) fail(where + ".n", "ball dimension must be at least 2");
      if (!(g.analytic.radius > 0.0)) fail(where + ".radius", "must be positive");
      break;
    case AnalyticDomain::Kind::Hemisphere: break;
    }
    return g;
  }

  g.kind = GeometrySpec::Kind::Chart;
  g.chart = chart_kind_from_string(v.at("chart").get<std::string>());
  if (v.contains("domain")) g.domain = rect_from(v.at("domain"), where + ".domain");
  switch (g.chart) {
  case ChartKind::Flat:
    g.ambient_dim = int_at(v, "ambient_dim", 2, where);
    if (g.ambient_dim < 2) fail(where + ".ambient_dim", "must be at least 2");
    if (!v.contains("region")) fail(where, "flat charts need a 'region'");
    g.region = region_from(v.at("region"), where + ".region");
    break;
  case ChartKind::SphereCap:
    g.shape = scalar_at(v, "theta0", where);
    g.ambient_dim = 3;
    g.region = v.contains("region") ? region_from(v.at("region"), where + ".region")
                                    : Region::disk(ParamPoint::Zero(), g.shape);
    break;
  case ChartKind::Catenoid:
  case ChartKind::Helicoid: {
    const char* key = g.chart == ChartKind::Catenoid ? "scale" : "pitch";
    g.shape = v.contains(key) ? scalar_at(v, key, where) : 1.0;
    g.ambient_dim = 3;
    if (!v.contains("region")) fail(where, "minimal-surface charts need a 'region'");
    g.region = region_from(v.at("region"), where + ".region");
    break;
  }
  }
  return g;
}

ordered_json geometry_to(const GeometrySpec& g) {
  ordered_json out;
  if (g.kind == GeometrySpec::Kind::Analytic) {
    out["analytic"] = to_string(g.analytic.kind);
    if (g.analytic.kind == AnalyticDomain::Kind::Rectangle) {
      out["a"] = g.analytic.a;
      out["b"] = g.analytic.b;
    } else if (g.analytic.kind == AnalyticDomain::Kind::Ball) {
      out["n"] = g.analytic.n;
      out["radius"] = g.analytic.radius;
    }
    return out;
  }
  out["chart"] = to_string(g.chart);
  switch (g.chart) {
  case ChartKind::Flat: out["ambient_dim"] = g.ambient_dim; break;
  case ChartKind::SphereCap: out["theta0"] = g.shape; break;
  case ChartKind::Catenoid: out["scale"] = g.shape; break;
  case ChartKind::Helicoid: out["pitch"] = g.shape; break;
  }
  if (g.domain) out["domain"] = rect_to(*g.domain);
  out["region"] = region_to(g.region);
  return out;
}

DomainSpec domain_from(const json& v, const std::string& where) {
  require_keys(v, where,
               {"id", "geometry", "h", "refinements", "eigen_count", "h0_sq", "diagnostics_t", "kmax",
                "lmax", "bounds_geometry", "diagnostics"});
  DomainSpec d;
  if (!v.contains("id") || !v.at("id").is_string()) fail(where, "missing string 'id'");
  d.domain_id = v.at("id").get<std::string>();
  const std::string at = where + "[" + d.domain_id + "]";
  if (d.domain_id.empty() || d.domain_id.find_first_of(",\"\n") != std::string::npos) {
    fail(at, "id must be nonempty without commas, quotes or newlines");
  }
  if (!v.contains("geometry")) fail(at, "missing 'geometry'");
  d.geometry = geometry_from(v.at("geometry"), at + ".geometry");
  const bool analytic = d.geometry.kind == GeometrySpec::Kind::Analytic;
  if (v.contains("h")) {
    d.h = scalar_at(v, "h", at);
  } else if (!analytic) {
    fail(at, "missing 'h'");
  }
  if (!(d.h > 0.0)) fail(at + ".h", "must be positive");
  d.refinements = int_at(v, "refinements", 0, at);
  d.eigen_count = int_at(v, "eigen_count", 8, at);
  d.kmax = int_at(v, "kmax", 3, at);
  d.lmax = int_at(v, "lmax", 1, at);
  if (d.refinements < 0) fail(at + ".refinements", "must be nonnegative");
  if (d.kmax < 1 || d.lmax < 1) fail(at, "kmax and lmax must be at least 1");
  const int n = d.geometry.intrinsic_dim();
  if (d.eigen_count < std::max({d.kmax + 1, d.lmax + 1, n + 2})) {
    fail(at + ".eigen_count", "must be at least max(kmax+1, lmax+1, n+2)");
  }
  if (v.contains("h0_sq")) {
    const json& p = v.at("h0_sq");
    if (p.is_string() && p.get<std::string>() == "zero") {
      d.h0_sq.kind = H0Policy::Kind::Zero;
    } else if (p.is_string() && p.get<std::string>() == "computed") {
      d.h0_sq.kind = H0Policy::Kind::Computed;
    } else {
      d.h0_sq.kind = H0Policy::Kind::Explicit;
      d.h0_sq.value = parse_scalar(p);
      if (!(d.h0_sq.value >= 0.0)) fail(at + ".h0_sq", "must be nonnegative");
    }
  }
  if (v.contains("diagnostics_t")) {
    const json& ts = v.at("diagnostics_t");
    if (!ts.is_array() || ts.empty()) fail(at + ".diagnostics_t", "expected a nonempty list");
    d.diagnostics_t.clear();
    for (const json& t : ts) {
      const double value = parse_scalar(t);
      if (!(value > 0.5)) fail(at + ".diagnostics_t", "every t must exceed 1/2");
      d.diagnostics_t.push_back(value);
    }
  }
  if (v.contains("bounds_geometry")) {
    d.bounds_geometry = geometry_class_from_string(v.at("bounds_geometry").get<std::string>());
  }
  if (v.contains("diagnostics")) {
    if (!v.at("diagnostics").is_boolean()) fail(at + ".diagnostics", "expected true or false");
    d.diagnostics = v.at("diagnostics").get<bool>();
  }
  return d;
}

} // namespace

int GeometrySpec::intrinsic_dim() const {
  if (kind == Kind::Analytic) return analytic.intrinsic_dim();
  return ImmersedChart::intrinsic_dim();
}

ImmersedChart GeometrySpec::make_chart(const std::string& name) const {
  if (kind == Kind::Analytic) throw ConfigurationError("analytic geometry '" + name + "' has no chart");
  switch (chart) {
  case ChartKind::Flat: return ImmersedChart::flat(name, domain.value_or(region.bounding_box()), ambient_dim);
  case ChartKind::SphereCap: return ImmersedChart::sphere_cap(name, shape);
  case ChartKind::Catenoid:
    return ImmersedChart::catenoid(name, domain.value_or(region.bounding_box()), shape);
  case ChartKind::Helicoid:
    return ImmersedChart::helicoid(name, domain.value_or(region.bounding_box()), shape);
  }
  throw ConfigurationError("unknown chart kind");
}

GeometryClass GeometrySpec::natural_class() const {
  if (kind == Kind::Analytic) {
    return analytic.kind == AnalyticDomain::Kind::Hemisphere ? GeometryClass::Sphere
                                                            : GeometryClass::Euclidean;
  }
  switch (chart) {
  case ChartKind::Flat: return GeometryClass::Euclidean;
  case ChartKind::SphereCap: return GeometryClass::Sphere;
  case ChartKind::Catenoid:
  case ChartKind::Helicoid: return GeometryClass::Minimal;
  }
  return GeometryClass::General;
}

double parse_scalar(const json& value) {
  if (value.is_number()) return value.get<double>();
  if (!value.is_string()) throw ConfigurationError("expected a number or a pi expression");
  std::string s;
  for (char ch : value.get<std::string>()) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  const std::string whole = s;
  double den = 1.0;
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    den = plain_number(s.substr(slash + 1), whole);
    s = s.substr(0, slash);
    if (den == 0.0) throw ConfigurationError("division by zero in '" + whole + "'");
  }
  if (const auto pi = s.find("pi"); pi != std::string::npos) {
    if (pi + 2 != s.size()) throw ConfigurationError("cannot read number '" + whole + "'");
    std::string coef = s.substr(0, pi);
    if (!coef.empty() && coef.back() == '*') coef.pop_back();
    if (coef == "-") coef = "-1";
    if (coef == "+") coef = "1";
    return plain_number(coef, whole) * std::numbers::pi / den;
  }
  if (s.empty()) throw ConfigurationError("empty number");
  return plain_number(s, whole) / den;
}

RunConfig parse_config(const json& doc) {
  require_keys(doc, "config", {"domains"});
  if (!doc.contains("domains") || !doc.at("domains").is_array()) {
    throw ConfigurationError("config: expected a 'domains' list");
  }
  RunConfig config;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < doc.at("domains").size(); ++i) {
    const std::string where = "domains[" + std::to_string(i) + "]";
    DomainSpec d;
    try {
      d = domain_from(doc.at("domains")[i], where);
      if (d.geometry.kind == GeometrySpec::Kind::Chart) d.geometry.make_chart(d.domain_id);
    } catch (const ConfigurationError&) {
      throw;
    } catch (const Error& e) {
      fail(where, e.what());
    } catch (const json::exception& e) {
      fail(where, e.what());
    }
    if (!seen.insert(d.domain_id).second) {
      throw ConfigurationError("config: duplicate domain id '" + d.domain_id + "'");
    }
    config.domains.push_back(std::move(d));
  }
  return config;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in, nullptr, true, true);
  } catch (const json::parse_error& e) {
    throw ConfigurationError("config '" + path.string() + "': " + e.what());
  }
  return parse_config(doc);
}

ordered_json to_json(const DomainSpec& d) {
  ordered_json out;
  out["id"] = d.domain_id;
  out["geometry"] = geometry_to(d.geometry);
  out["h"] = d.h;
  out["refinements"] = d.refinements;
  out["eigen_count"] = d.eigen_count;
  switch (d.h0_sq.kind) {
  case H0Policy::Kind::Zero: out["h0_sq"] = "zero"; break;
  case H0Policy::Kind::Computed: out["h0_sq"] = "computed"; break;
  case H0Policy::Kind::Explicit: out["h0_sq"] = d.h0_sq.value; break;
  }
  out["diagnostics_t"] = d.diagnostics_t;
  out["kmax"] = d.kmax;
  out["lmax"] = d.lmax;
  if (d.bounds_geometry) out["bounds_geometry"] = to_string(*d.bounds_geometry);
  out["diagnostics"] = d.diagnostics;
  return out;
}

ordered_json to_json(const RunConfig& config) {
  ordered_json out;
  out["domains"] = ordered_json::array();
  for (const DomainSpec& d : config.domains) out["domains"].push_back(to_json(d));
  return out;
}

} // namespace spectral
