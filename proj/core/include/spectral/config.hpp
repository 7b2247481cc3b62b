// Copyright the spectral-bounds authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spectral/analytic.hpp"
#include "spectral/bounds.hpp"
#include "spectral/geometry.hpp"
#include "spectral/mesh.hpp"

namespace spectral {

/// Either an immersed chart with a meshed region, or a closed-form domain.
struct GeometrySpec {
  enum class Kind { Chart, Analytic };

  Kind kind = Kind::Chart;

  ChartKind chart = ChartKind::Flat;
  /// Chart parameter domain; for flat charts it defaults to the region's
  /// bounding box, for sphere caps it is fixed by theta0.
  std::optional<ParamRect> domain;
  Region region;
  int ambient_dim = 2; ///< flat charts only
  double shape = 1.0;  ///< theta0, catenoid scale or helicoid pitch

  AnalyticDomain analytic;

  /// Intrinsic dimension of the domain.
  int intrinsic_dim() const;
  /// Builds the chart named `name`; throws for analytic geometries.
  ImmersedChart make_chart(const std::string& name) const;
  /// Geometry class implied by the chart or analytic kind.
  GeometryClass natural_class() const;
  bool operator==(const GeometrySpec&) const = default;
};

struct H0Policy {
  enum class Kind { Zero, Computed, Explicit };
  Kind kind = Kind::Computed;
  double value = 0.0; ///< for Explicit
  bool operator==(const H0Policy&) const = default;
};

struct DomainSpec {
  std::string domain_id;
  GeometrySpec geometry;
  double h = 0.1;
  int refinements = 0;
  int eigen_count = 8;
  H0Policy h0_sq;
  std::vector<double> diagnostics_t{2.0};
  int kmax = 3;
  int lmax = 1;
  std::optional<GeometryClass> bounds_geometry;
  bool diagnostics = true;

  GeometryClass geometry_class() const {
    return bounds_geometry ? *bounds_geometry : geometry.natural_class();
  }
  bool operator==(const DomainSpec&) const = default;
};

struct RunConfig {
  std::vector<DomainSpec> domains;
  bool operator==(const RunConfig&) const = default;
};

/// Reads a number or an expression of the form `[c*]pi[/d]` ("pi/2", "2*pi").
double parse_scalar(const nlohmann::json& value);

/// Throws ConfigurationError on unknown keys, missing fields or bad values.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::filesystem::path& path);
nlohmann::ordered_json to_json(const RunConfig& config);
nlohmann::ordered_json to_json(const DomainSpec& spec);

} // namespace spectral
