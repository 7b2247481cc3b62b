// Copyright the spectral-bounds authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <vector>

#include <Eigen/Core>

namespace spectral {

enum class SpectrumSource { Fem, Analytic };

/// Ascending Dirichlet eigenvalues, optionally with mass-orthonormal discrete
/// eigenfunctions (one column per eigenvalue, reduced interior indexing).
struct Spectrum {
  std::vector<double> lambdas;
  Eigen::MatrixXd modes;
  int n_dim = 2;
  SpectrumSource source = SpectrumSource::Fem;
  /// True when `modes` spans the whole discrete space.
  bool complete = false;

  int size() const { return static_cast<int>(lambdas.size()); }
  bool has_modes() const { return modes.cols() > 0; }
};

/// `index,lambda` CSV with a header row, 1-based indices, 12 significant digits.
void write_spectrum_csv(std::ostream& out, const std::vector<double>& lambdas);

/// Reads either `index,lambda` rows or one value per line; header lines and
/// blank lines are skipped.
std::vector<double> read_spectrum_csv(std::istream& in);

} // namespace spectral
