// Copyright the spectral-bounds authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "spectral/error.hpp"
#include "spectral/mesh.hpp"

using namespace spectral;

TEST(Mesh, SquareGridCounts) {
  const TriMesh m = mesh_rectangle(std::numbers::pi, std::numbers::pi, std::numbers::pi / 4);
  EXPECT_EQ(m.vertex_count(), 25);
  EXPECT_EQ(m.triangle_count(), 32);
  EXPECT_EQ(m.boundary_count(), 16);
  EXPECT_EQ(m.interior_count(), 9);
  EXPECT_EQ(m.euler_characteristic(), 1);
  EXPECT_EQ(m.boundary_loop_count(), 1);
  EXPECT_NEAR(m.total_param_area(), std::numbers::pi * std::numbers::pi, 1e-12);
  EXPECT_NEAR(m.min_angle_degrees(), 45.0, 1e-9);
  for (int t = 0; t < m.triangle_count(); ++t) EXPECT_GT(m.param_area(t), 0.0);
}

TEST(Mesh, DiskIsATopologicalDiskWithBoundaryOnTheCircle) {
  const TriMesh m = mesh_disk(1.0, 0.1);
  EXPECT_EQ(m.euler_characteristic(), 1);
  EXPECT_EQ(m.boundary_loop_count(), 1);
  EXPECT_GT(m.min_angle_degrees(), 20.0);
  EXPECT_LE(m.max_edge_length(), 0.15);
  for (int i = 0; i < m.vertex_count(); ++i) {
    if (m.boundary[i]) EXPECT_NEAR(m.params[i].norm(), 1.0, 1e-14);
  }
  EXPECT_NEAR(m.total_param_area(), std::numbers::pi, 0.02);
}

TEST(Mesh, RefinementQuadruplesAndProjectsBoundary) {
  const TriMesh coarse = mesh_disk(1.0, 0.25);
  const TriMesh fine = refine(coarse);
  EXPECT_EQ(fine.triangle_count(), 4 * coarse.triangle_count());
  EXPECT_EQ(fine.vertex_count(), coarse.vertex_count() + static_cast<int>(coarse.edges().size()));
  EXPECT_DOUBLE_EQ(fine.h, 0.125);
  EXPECT_EQ(fine.euler_characteristic(), 1);
  for (int i = 0; i < fine.vertex_count(); ++i) {
    if (fine.boundary[i]) EXPECT_NEAR(fine.params[i].norm(), 1.0, 1e-14);
  }
  EXPECT_GT(std::abs(fine.total_param_area() - std::numbers::pi),
            0.0); // still polygonal
  EXPECT_LT(std::abs(fine.total_param_area() - std::numbers::pi),
            std::abs(coarse.total_param_area() - std::numbers::pi));
}

TEST(Mesh, RefinedSquareMatchesDirectGrid) {
  const TriMesh direct = mesh_rectangle(1.0, 1.0, 0.125);
  const TriMesh refined = refine(mesh_rectangle(1.0, 1.0, 0.25));
  EXPECT_EQ(direct.vertex_count(), refined.vertex_count());
  EXPECT_EQ(direct.boundary_count(), refined.boundary_count());
  EXPECT_NEAR(direct.min_angle_degrees(), refined.min_angle_degrees(), 1e-9);
}

TEST(Mesh, ChartMeshEmbedsVertices) {
  const auto cap = ImmersedChart::sphere_cap("cap", std::numbers::pi / 2);
  const TriMesh m = mesh_chart(cap, Region::disk(ParamPoint::Zero(), std::numbers::pi / 2), 0.2);
  EXPECT_EQ(m.ambient_dim(), 3);
  EXPECT_EQ(m.chart_id, "cap");
  for (int i = 0; i < m.vertex_count(); ++i) {
    EXPECT_NEAR(m.embedded.row(i).norm(), 1.0, 1e-14);
    if (m.boundary[i]) EXPECT_NEAR(m.embedded(i, 2), 0.0, 1e-14); // the equator
  }
}

TEST(Mesh, RejectsBadInputs) {
  EXPECT_THROW(mesh_rectangle(1.0, 1.0, 0.6), ArgumentError);
  EXPECT_THROW(mesh_rectangle(1.0, -1.0, 0.1), ArgumentError);
  EXPECT_THROW(mesh_disk(1.0, 0.0), ArgumentError);
  const auto cat = ImmersedChart::catenoid("cat", {0, 1, 0, 1});
  EXPECT_THROW(mesh_chart(cat, Region::rectangle({0, 2, 0, 1}), 0.1), DomainError);
  EXPECT_THROW(mesh_chart(cat, Region::disk({0.5, 0.5}, 0.6), 0.1), DomainError);
}

TEST(Mesh, WriteMeshFormat) {
  const TriMesh m = mesh_rectangle(1.0, 1.0, 0.5);
  std::ostringstream out;
  write_mesh(out, m);
  std::istringstream in(out.str());
  std::string line;
  int v = 0, t = 0;
  while (std::getline(in, line)) {
    if (line[0] == 'v') ++v;
    if (line[0] == 't') ++t;
  }
  EXPECT_EQ(v, m.vertex_count());
  EXPECT_EQ(t, m.triangle_count());
  EXPECT_EQ(out.str().substr(0, 2), "v ");
}

TEST(Region, AreaAndProjection) {
  const Region d = Region::disk({1.0, 2.0}, 0.5);
  EXPECT_NEAR(d.area(), std::numbers::pi / 4, 1e-15);
  EXPECT_TRUE(d.project_to_boundary({1.2, 2.0}).isApprox(ParamPoint{1.5, 2.0}));
  const Region r = Region::rectangle({0, 2, 0, 1});
  EXPECT_DOUBLE_EQ(r.area(), 2.0);
  EXPECT_TRUE(r.project_to_boundary({1.0, 0.1}).isApprox(ParamPoint{1.0, 0.0}));
}
