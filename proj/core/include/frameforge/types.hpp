// Copyright 2026 The frameforge Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace frameforge {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;  // column-major
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;
using IndexList = std::vector<Index>;

inline constexpr double kPi = 3.14159265358979323846;

// e^{2 pi i num / den}, with the numerator reduced first so large
// exponents keep full precision.
inline Complex root_of_unity(long long num, long long den) {
  long long r = num % den;
  if (r < 0) r += den;
  const double angle = 2.0 * kPi * static_cast<double>(r) / static_cast<double>(den);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace frameforge
