// Copyright the spectral-bounds authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include <Eigen/SparseCore>

#include "spectral/geometry.hpp"
#include "spectral/mesh.hpp"

namespace spectral {

/// Symmetric sparse matrix. Both triangles are stored; entry (a,b) and (b,a)
/// are written from the same value during assembly, so symmetry is exact.
struct SparseSymMatrix {
  Eigen::SparseMatrix<double> data;

  int dimension() const { return static_cast<int>(data.rows()); }
};

/// Global P1 stiffness and consistent mass matrices over all mesh vertices.
struct FemMatrices {
  SparseSymMatrix stiffness;
  SparseSymMatrix mass;
};

/// The Dirichlet-reduced pencil (K_int, M_int) on interior vertices.
struct DirichletSystem {
  SparseSymMatrix stiffness;
  SparseSymMatrix mass;
  std::vector<int> interior_to_vertex;
  std::vector<int> vertex_to_interior; ///< -1 for boundary vertices

  int dimension() const { return stiffness.dimension(); }
};

/// Local P1 element matrices for a triangle with parameter vertices p0,p1,p2
/// and a constant metric g.
struct ElementMatrices {
  Eigen::Matrix3d stiffness;
  Eigen::Matrix3d mass;
  double area = 0.0; ///< Riemannian area of the element
};

ElementMatrices element_matrices(const ParamPoint& p0, const ParamPoint& p1, const ParamPoint& p2,
                                 const Eigen::Matrix2d& g);

/// Parameter gradients of the three barycentric hat functions on a triangle.
Eigen::Matrix<double, 2, 3> hat_gradients(const ParamPoint& p0, const ParamPoint& p1,
                                          const ParamPoint& p2);

/// Assembles the Laplace-Beltrami stiffness and mass matrices, evaluating the
/// induced metric once per triangle at its parameter centroid.
FemMatrices assemble(const TriMesh& mesh, const ImmersedChart& chart);

/// Deletes boundary rows and columns.
DirichletSystem apply_dirichlet(const FemMatrices& fem, const TriMesh& mesh);

/// Row sums of a mass matrix.
Eigen::VectorXd lumped(const SparseSymMatrix& mass);

/// Copies a reduced (interior) vector into a full vertex vector, zero on the
/// boundary.
Eigen::VectorXd lift(const DirichletSystem& sys, const Eigen::VectorXd& reduced);

} // namespace spectral
