// Copyright the spectral-bounds authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>

#include "spectral/fem.hpp"
#include "spectral/spectrum.hpp"

namespace spectral {

/// Largest reduced dimension accepted by solve_all.
inline constexpr int kDenseLimit = 3000;
/// Below this size solve_lowest uses the dense path as well.
inline constexpr int kDirectLowestLimit = 600;
/// Relative residual ||K u - lambda M u|| / ||K u|| every returned pair meets.
inline constexpr double kResidualTolerance = 1e-8;

/// The m smallest eigenpairs of K u = lambda M u. Modes are M-orthonormal and
/// each is signed so that its largest-magnitude entry is positive.
Spectrum solve_lowest(const DirichletSystem& sys, int m);

/// Complete discrete spectrum via the dense generalized solver.
Spectrum solve_all(const DirichletSystem& sys);

/// Max over the returned pairs of ||K u - lambda M u||_2 / ||K u||_2.
double max_relative_residual(const DirichletSystem& sys, const Spectrum& spec);

/// Text dump of modes: one line per mesh vertex, `vertex u_1 ... u_m`, zero on
/// the boundary.
void write_modes_text(std::ostream& out, const DirichletSystem& sys, const Spectrum& spec);

} // namespace spectral
