// Copyright 2026 The frameforge Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "frameforge/types.hpp"

namespace frameforge {

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kRankTolerance = 1e-10;

// Conjugate transpose of the frame times the frame.
Matrix gram(const Matrix& frame);

// Largest entrywise |H - H*|.
double hermitian_defect(const Matrix& h);

// Eigenvalues of a Hermitian matrix, descending, with multiplicity.
// Throws NotHermitian or FailedToConverge.
std::vector<double> hermitian_eigenvalues(const Matrix& h);

struct Eigensystem {
  RealVector values;  // descending
  Matrix vectors;     // column i pairs with values[i]
};
Eigensystem hermitian_eigensystem(const Matrix& h);

// Largest singular value; zero for an empty or zero matrix.
double spectral_norm(const Matrix& m);

// Smallest of the min(rows, cols) singular values.
double smallest_singular_value(const Matrix& m);

// All singular values, descending.
RealVector singular_values(const Matrix& m);

// True when the columns are linearly dependent: more columns than rows,
// or smallest singular value below rel_tol times the largest.
bool columns_dependent(const Matrix& m, double rel_tol);

// Minimizer of ||y - a x|| for a with full column rank. The rank is
// certified first (smallest singular value above 1e-10 times the
// largest); the solve itself runs through the eigendecomposition of the
// Gram. Throws RankDeficient.
Vector least_squares(const Matrix& a, const Vector& y);

// Restriction of a matrix to the listed columns, in list order.
Matrix select_columns(const Matrix& m, const IndexList& columns);

}  // namespace frameforge
