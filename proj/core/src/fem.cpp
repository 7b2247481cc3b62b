// Copyright the spectral-bounds authors.
// SPDX-License-Identifier: Apache-2.0

#include "spectral/fem.hpp"

#include <Eigen/Dense>

#include "spectral/error.hpp"

namespace spectral {

Eigen::Matrix<double, 2, 3> hat_gradients(const ParamPoint& p0, const ParamPoint& p1,
                                          const ParamPoint& p2) {
  const double twice_area =
      (p1.x() - p0.x()) * (p2.y() - p0.y()) - (p2.x() - p0.x()) * (p1.y() - p0.y());
  Eigen::Matrix<double, 2, 3> grad;
  grad << p1.y() - p2.y(), p2.y() - p0.y(), p0.y() - p1.y(), //
      p2.x() - p1.x(), p0.x() - p2.x(), p1.x() - p0.x();
  return grad / twice_area;
}

ElementMatrices element_matrices(const ParamPoint& p0, const ParamPoint& p1, const ParamPoint& p2,
                                 const Eigen::Matrix2d& g) {
  const double param_area =
      0.5 * ((p1.x() - p0.x()) * (p2.y() - p0.y()) - (p2.x() - p0.x()) * (p1.y() - p0.y()));
  const Eigen::Matrix<double, 2, 3> grad = hat_gradients(p0, p1, p2);
  ElementMatrices e;
  e.area = std::sqrt(g.determinant()) * param_area;
  e.stiffness = e.area * (grad.transpose() * g.inverse() * grad);
  e.mass.setConstant(e.area / 12.0);
  e.mass.diagonal().setConstant(e.area / 6.0);
  return e;
}

FemMatrices assemble(const TriMesh& mesh, const ImmersedChart& chart) {
  if (mesh.chart_id != chart.name()) {
    throw ConfigurationError("assemble: mesh belongs to chart '" + mesh.chart_id + "', got '" +
                             chart.name() + "'");
  }
  const int nv = mesh.vertex_count();
  std::vector<Eigen::Triplet<double>> k_entries, m_entries;
  k_entries.reserve(static_cast<std::size_t>(mesh.triangle_count()) * 9);
  m_entries.reserve(static_cast<std::size_t>(mesh.triangle_count()) * 9);

  for (int t = 0; t < mesh.triangle_count(); ++t) {
    const auto& tri = mesh.triangles[t];
    if (!(mesh.param_area(t) > 0.0)) {
      throw AssemblyError("assemble: triangle " + std::to_string(t) + " is degenerate");
    }
    const MetricSample metric = metric_at(chart, mesh.centroid(t));
    const ElementMatrices e =
        element_matrices(mesh.params[tri[0]], mesh.params[tri[1]], mesh.params[tri[2]], metric.g);
    for (int a = 0; a < 3; ++a) {
      k_entries.emplace_back(tri[a], tri[a], e.stiffness(a, a));
      m_entries.emplace_back(tri[a], tri[a], e.mass(a, a));
      for (int b = a + 1; b < 3; ++b) {
        // Mirror from the upper element entry so the global matrix is exactly symmetric.
        const double kab = e.stiffness(a, b);
        const double mab = e.mass(a, b);
        k_entries.emplace_back(tri[a], tri[b], kab);
        k_entries.emplace_back(tri[b], tri[a], kab);
        m_entries.emplace_back(tri[a], tri[b], mab);
        m_entries.emplace_back(tri[b], tri[a], mab);
      }
    }
  }
  FemMatrices out;
  out.stiffness.data.resize(nv, nv);
  out.mass.data.resize(nv, nv);
  out.stiffness.data.setFromTriplets(k_entries.begin(), k_entries.end());
  out.mass.data.setFromTriplets(m_entries.begin(), m_entries.end());
  return out;
}

namespace {

Eigen::SparseMatrix<double> restrict_to(const Eigen::SparseMatrix<double>& full,
                                        const std::vector<int>& vertex_to_interior, int n) {
  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(static_cast<std::size_t>(full.nonZeros()));
  for (int col = 0; col < full.outerSize(); ++col) {
    const int jc = vertex_to_interior[col];
    if (jc < 0) continue;
    for (Eigen::SparseMatrix<double>::InnerIterator it(full, col); it; ++it) {
      const int ir = vertex_to_interior[it.row()];
      if (ir >= 0) entries.emplace_back(ir, jc, it.value());
    }
  }
  Eigen::SparseMatrix<double> out(n, n);
  out.setFromTriplets(entries.begin(), entries.end());
  return out;
}

} // namespace

DirichletSystem apply_dirichlet(const FemMatrices& fem, const TriMesh& mesh) {
  if (fem.stiffness.dimension() != mesh.vertex_count()) {
    throw ConfigurationError("apply_dirichlet: matrices do not match the mesh");
  }
  if (mesh.boundary_count() == 0) {
    throw ArgumentError("apply_dirichlet: mesh has no boundary vertices");
  }
  DirichletSystem sys;
  sys.vertex_to_interior.assign(mesh.vertex_count(), -1);
  for (int v = 0; v < mesh.vertex_count(); ++v) {
    if (!mesh.boundary[v]) {
      sys.vertex_to_interior[v] = static_cast<int>(sys.interior_to_vertex.size());
      sys.interior_to_vertex.push_back(v);
    }
  }
  const int n = static_cast<int>(sys.interior_to_vertex.size());
  if (n == 0) {
    throw ArgumentError("apply_dirichlet: every vertex is on the boundary; nothing to solve");
  }
  sys.stiffness.data = restrict_to(fem.stiffness.data, sys.vertex_to_interior, n);
  sys.mass.data = restrict_to(fem.mass.data, sys.vertex_to_interior, n);
  return sys;
}

Eigen::VectorXd lumped(const SparseSymMatrix& mass) {
  Eigen::VectorXd ones = Eigen::VectorXd::Ones(mass.dimension());
  return mass.data * ones;
}

Eigen::VectorXd lift(const DirichletSystem& sys, const Eigen::VectorXd& reduced) {
  Eigen::VectorXd full = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(sys.vertex_to_interior.size()));
  for (std::size_t i = 0; i < sys.interior_to_vertex.size(); ++i) {
    full(sys.interior_to_vertex[i]) = reduced(static_cast<Eigen::Index>(i));
  }
  return full;
}

} // namespace spectral
