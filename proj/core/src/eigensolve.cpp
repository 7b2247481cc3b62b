// Copyright the spectral-bounds authors.
// SPDX-License-Identifier: Apache-2.0

#include "spectral/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include <Eigen/Dense>
#include <Eigen/SparseCholesky>

#include "spectral/error.hpp"

namespace spectral {

namespace {

constexpr double kInternalTolerance = 1e-11;
constexpr int kMaxIterations = 2000;

// splitmix64; fixed seed keeps the iterative path reproducible across platforms.
class StartVectors {
public:
  explicit StartVectors(std::uint64_t seed) : state_(seed) {}

  double next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return static_cast<double>(z >> 11) * 0x1.0p-53 * 2.0 - 1.0;
  }

private:
  std::uint64_t state_;
};

void normalize_signs(Eigen::MatrixXd& modes) {
  for (Eigen::Index c = 0; c < modes.cols(); ++c) {
    Eigen::Index idx = 0;
    modes.col(c).cwiseAbs().maxCoeff(&idx);
    if (modes(idx, c) < 0.0) modes.col(c) *= -1.0;
  }
}

Spectrum finish(std::vector<double> lambdas, Eigen::MatrixXd modes, bool complete) {
  // Stable ascending order; ties keep solver order.
  std::vector<int> order(lambdas.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return lambdas[a] < lambdas[b]; });
  Spectrum s;
  s.lambdas.resize(lambdas.size());
  s.modes.resize(modes.rows(), modes.cols());
  for (std::size_t i = 0; i < order.size(); ++i) {
    s.lambdas[i] = lambdas[order[i]];
    s.modes.col(static_cast<Eigen::Index>(i)) = modes.col(order[i]);
  }
  normalize_signs(s.modes);
  s.n_dim = 2;
  s.source = SpectrumSource::Fem;
  s.complete = complete;
  return s;
}

Spectrum solve_dense(const DirichletSystem& sys, int m) {
  const Eigen::MatrixXd K = Eigen::MatrixXd(sys.stiffness.data);
  const Eigen::MatrixXd M = Eigen::MatrixXd(sys.mass.data);
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(K, M, Eigen::ComputeEigenvectors |
                                                                         Eigen::Ax_lBx);
  if (es.info() != Eigen::Success) {
    throw SolverError("dense generalized eigensolver failed (mass matrix not positive definite?)");
  }
  std::vector<double> lambdas(es.eigenvalues().data(), es.eigenvalues().data() + m);
  return finish(std::move(lambdas), es.eigenvectors().leftCols(m), m == sys.dimension());
}

// M-orthonormalize the columns of Y in place (two passes of modified
// Gram-Schmidt). Columns that collapse are replaced by fresh start vectors.
void m_orthonormalize(Eigen::MatrixXd& Y, const Eigen::SparseMatrix<double>& M, StartVectors& rng) {
  for (Eigen::Index c = 0; c < Y.cols(); ++c) {
    for (int attempt = 0; attempt < 4; ++attempt) {
      const double before = std::sqrt(Y.col(c).dot(M * Y.col(c)));
      for (int pass = 0; pass < 2; ++pass) {
        for (Eigen::Index p = 0; p < c; ++p) {
          const double proj = Y.col(p).dot(M * Y.col(c));
          Y.col(c) -= proj * Y.col(p);
        }
      }
      const double after = std::sqrt(Y.col(c).dot(M * Y.col(c)));
      if (after > 1e-10 * before && after > 0.0) {
        Y.col(c) /= after;
        break;
      }
      for (Eigen::Index i = 0; i < Y.rows(); ++i) Y(i, c) = rng.next();
    }
  }
}

// Block shift-invert subspace iteration (shift 0, K is SPD after Dirichlet
// reduction) with Rayleigh-Ritz projection each sweep.
Spectrum solve_iterative(const DirichletSystem& sys, int m) {
  const Eigen::SparseMatrix<double>& K = sys.stiffness.data;
  const Eigen::SparseMatrix<double>& M = sys.mass.data;
  const int n = sys.dimension();
  const int p = std::min(n, std::max(2 * m, m + 10));

  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> factor(K);
  if (factor.info() != Eigen::Success) {
    throw SolverError("sparse factorization of the stiffness matrix failed");
  }

  StartVectors rng(0x5eed5eedULL);
  Eigen::MatrixXd X(n, p);
  for (Eigen::Index c = 0; c < p; ++c)
    for (Eigen::Index i = 0; i < n; ++i) X(i, c) = rng.next();

  Eigen::VectorXd theta;
  double worst = 0.0;
  for (int it = 1; it <= kMaxIterations; ++it) {
    Eigen::MatrixXd Y = factor.solve(M * X);
    m_orthonormalize(Y, M, rng);
    Eigen::MatrixXd H = Y.transpose() * (K * Y);
    H = 0.5 * (H + H.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(H);
    theta = small.eigenvalues();
    X = Y * small.eigenvectors();

    worst = 0.0;
    for (int i = 0; i < m; ++i) {
      const Eigen::VectorXd kx = K * X.col(i);
      const double res = (kx - theta(i) * (M * X.col(i))).norm() / kx.norm();
      worst = std::max(worst, res);
    }
    if (worst <= kInternalTolerance) {
      std::vector<double> lambdas(theta.data(), theta.data() + m);
      return finish(std::move(lambdas), X.leftCols(m), m == n);
    }
  }
  if (worst <= kResidualTolerance) {
    std::vector<double> lambdas(theta.data(), theta.data() + m);
    return finish(std::move(lambdas), X.leftCols(m), m == n);
  }
  std::ostringstream msg;
  msg << "subspace iteration did not converge: " << kMaxIterations
      << " sweeps, block size " << p << ", worst relative residual " << worst;
  throw SolverError(msg.str());
}

} // namespace

Spectrum solve_lowest(const DirichletSystem& sys, int m) {
  const int n = sys.dimension();
  if (m < 1 || m > n) {
    throw ArgumentError("solve_lowest: requested " + std::to_string(m) +
                        " eigenpairs from a system of dimension " + std::to_string(n));
  }
  if (n <= kDirectLowestLimit || 3 * m >= n) {
    return solve_dense(sys, m);
  }
  return solve_iterative(sys, m);
}

Spectrum solve_all(const DirichletSystem& sys) {
  const int n = sys.dimension();
  if (n > kDenseLimit) {
    throw ArgumentError("solve_all: reduced dimension " + std::to_string(n) + " exceeds " +
                        std::to_string(kDenseLimit) +
                        "; coarsen the mesh or use solve_lowest for a partial spectrum");
  }
  return solve_dense(sys, n);
}

double max_relative_residual(const DirichletSystem& sys, const Spectrum& spec) {
  double worst = 0.0;
  for (int i = 0; i < spec.size(); ++i) {
    const Eigen::VectorXd kx = sys.stiffness.data * spec.modes.col(i);
    const Eigen::VectorXd mx = sys.mass.data * spec.modes.col(i);
    worst = std::max(worst, (kx - spec.lambdas[i] * mx).norm() / kx.norm());
  }
  return worst;
}

void write_spectrum_csv(std::ostream& out, const std::vector<double>& lambdas) {
  out << "index,lambda\n";
  char buf[64];
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%zu,%.12g\n", i + 1, lambdas[i]);
    out << buf;
  }
}

std::vector<double> read_spectrum_csv(std::istream& in) {
  std::vector<double> values;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const auto comma = line.find(',');
    const std::string field = (comma == std::string::npos) ? line : line.substr(comma + 1);
    try {
      std::size_t used = 0;
      const double v = std::stod(field, &used);
      values.push_back(v);
    } catch (const std::exception&) {
      if (values.empty() && line_no == 1) continue; // header
      throw IoError("spectrum CSV line " + std::to_string(line_no) + ": cannot parse '" + line + "'");
    }
  }
  return values;
}

void write_modes_text(std::ostream& out, const DirichletSystem& sys, const Spectrum& spec) {
  char buf[64];
  out << "# vertex";
  for (int j = 0; j < spec.modes.cols(); ++j) out << " u" << (j + 1);
  out << '\n';
  for (std::size_t v = 0; v < sys.vertex_to_interior.size(); ++v) {
    out << v;
    const int r = sys.vertex_to_interior[v];
    for (int j = 0; j < spec.modes.cols(); ++j) {
      std::snprintf(buf, sizeof buf, " %.12g", r < 0 ? 0.0 : spec.modes(r, j));
      out << buf;
    }
    out << '\n';
  }
}

} // namespace spectral
