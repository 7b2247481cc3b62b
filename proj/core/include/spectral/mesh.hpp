// Copyright the spectral-bounds authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "spectral/geometry.hpp"

namespace spectral {

/// Parameter-space region meshed inside a chart: a rectangle or a disk.
struct Region {
  enum class Kind { Rectangle, Disk };

  Kind kind = Kind::Rectangle;
  ParamRect rect;
  ParamPoint center = ParamPoint::Zero();
  double radius = 1.0;

  static Region rectangle(const ParamRect& r);
  static Region disk(const ParamPoint& center, double radius);

  ParamRect bounding_box() const;
  /// Area of the exact region (not of its polygonal approximation).
  double area() const;
  /// Closest point on the exact boundary curve.
  ParamPoint project_to_boundary(const ParamPoint& p) const;

  bool operator==(const Region& o) const;
};

/// Triangulated parameter domain with embedded coordinates.
///
/// Triangles are counterclockwise in parameter space. A vertex is flagged
/// boundary iff it lies on an edge used by exactly one triangle. The mesh
/// carries the chart and region it was generated from so it can be refined.
struct TriMesh {
  std::vector<ParamPoint> params;
  Eigen::MatrixXd embedded; ///< one row per vertex, ambient_dim columns
  std::vector<std::array<int, 3>> triangles;
  std::vector<char> boundary;
  double h = 0.0;
  std::string chart_id;
  ImmersedChart chart = ImmersedChart::flat("flat", {});
  Region region;

  int vertex_count() const { return static_cast<int>(params.size()); }
  int triangle_count() const { return static_cast<int>(triangles.size()); }
  int ambient_dim() const { return static_cast<int>(embedded.cols()); }
  int boundary_count() const;
  int interior_count() const { return vertex_count() - boundary_count(); }

  ParamPoint centroid(int t) const;
  /// Signed parameter-space area of triangle t.
  double param_area(int t) const;
  double total_param_area() const;

  std::vector<std::array<int, 2>> edges() const;
  std::vector<std::array<int, 2>> boundary_edges() const;
  int boundary_loop_count() const;
  /// V - E + F; equals 1 for a disk-topology mesh.
  int euler_characteristic() const;
  double max_edge_length() const;
  /// Smallest interior angle over all triangles, in degrees (parameter space).
  double min_angle_degrees() const;
};

TriMesh mesh_rectangle(double width, double height, double h);
TriMesh mesh_disk(double radius, double h);
TriMesh mesh_chart(const ImmersedChart& chart, const Region& region, double h);

/// Uniform 1-to-4 midpoint refinement; boundary midpoints are projected onto
/// the exact region boundary and all new vertices are re-embedded.
TriMesh refine(const TriMesh& mesh);

/// Plain-text dump: `v <u> <v> <x1> ... <xN> <bflag>` per vertex, then
/// `t <i> <j> <k>` per triangle (0-based indices).
void write_mesh(std::ostream& out, const TriMesh& mesh);

} // namespace spectral
