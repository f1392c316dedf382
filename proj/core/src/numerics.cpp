// Copyright 2026 The frameforge Authors.
// SPDX-License-Identifier: Apache-2.0

#include "frameforge/numerics.hpp"

#include <algorithm>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "frameforge/error.hpp"

namespace frameforge {
namespace {

void require_square(const Matrix& h) {
  require(h.rows() == h.cols(), ErrorCode::kInvalidArgument,
          "expected a square matrix, got " + std::to_string(h.rows()) + "x" +
              std::to_string(h.cols()));
}

void require_hermitian(const Matrix& h) {
  require_square(h);
  const double defect = hermitian_defect(h);
  require(defect <= kHermitianTolerance, ErrorCode::kNotHermitian,
          "max |H - H*| = " + std::to_string(defect));
}

}  // namespace

Matrix gram(const Matrix& frame) { return frame.adjoint() * frame; }

double hermitian_defect(const Matrix& h) {
  if (h.size() == 0) return 0.0;
  return (h - h.adjoint()).cwiseAbs().maxCoeff();
}

std::vector<double> hermitian_eigenvalues(const Matrix& h) {
  require_hermitian(h);
  if (h.size() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  require(solver.info() == Eigen::Success, ErrorCode::kFailedToConverge,
          "tridiagonal QR did not converge");
  const RealVector& ascending = solver.eigenvalues();
  return {ascending.reverse().begin(), ascending.reverse().end()};
}

Eigensystem hermitian_eigensystem(const Matrix& h) {
  require_hermitian(h);
  if (h.size() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::ComputeEigenvectors);
  require(solver.info() == Eigen::Success, ErrorCode::kFailedToConverge,
          "tridiagonal QR did not converge");
  return {solver.eigenvalues().reverse(), solver.eigenvectors().rowwise().reverse()};
}

double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  const Matrix small = m.rows() <= m.cols() ? Matrix(m * m.adjoint()) : gram(m);
  const auto values = hermitian_eigenvalues(small);
  return std::sqrt(std::max(0.0, values.front()));
}

RealVector singular_values(const Matrix& m) {
  if (m.size() == 0) return {};
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues();
}

double smallest_singular_value(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return singular_values(m).minCoeff();
}

bool columns_dependent(const Matrix& m, double rel_tol) {
  if (m.cols() == 0) return false;
  if (m.cols() > m.rows()) return true;
  const RealVector s = singular_values(m);
  const double largest = s.maxCoeff();
  return largest == 0.0 || s.minCoeff() < rel_tol * largest;
}

Vector least_squares(const Matrix& a, const Vector& y) {
  require(a.rows() == y.size(), ErrorCode::kInvalidArgument,
          "least_squares: row count " + std::to_string(a.rows()) +
              " does not match rhs length " + std::to_string(y.size()));
  if (a.cols() == 0) return Vector(0);
  require(a.cols() <= a.rows(), ErrorCode::kRankDeficient,
          "more unknowns than equations");
  const RealVector s = singular_values(a);
  const double largest = s.maxCoeff();
  require(largest > 0.0 && s.minCoeff() > kRankTolerance * largest,
          ErrorCode::kRankDeficient,
          "smallest singular value " + std::to_string(s.minCoeff()) + " vs largest " +
              std::to_string(largest));
  const Eigensystem es = hermitian_eigensystem(gram(a));
  const Vector projected = es.vectors.adjoint() * (a.adjoint() * y);
  return es.vectors * projected.cwiseQuotient(es.values.cast<Complex>());
}

Matrix select_columns(const Matrix& m, const IndexList& columns) {
  Matrix out(m.rows(), static_cast<Index>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    out.col(static_cast<Index>(j)) = m.col(columns[j]);
  }
  return out;
}

}  // namespace frameforge
