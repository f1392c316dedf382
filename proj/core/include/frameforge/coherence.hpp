// Copyright 2026 The frameforge Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <utility>

#include "frameforge/frame.hpp"

namespace frameforge {

struct CoherenceReport {
  Index m = 0;
  Index n = 0;
  double mu = 0.0;               // worst-case coherence
  double nu = 0.0;               // average coherence
  double spectral_norm = 0.0;
  double frame_potential = 0.0;  // squared Frobenius norm of the Gram
  double welch_bound = 0.0;
  bool scp1 = false;             // mu <= 1 / (164 ln N)
  bool scp2 = false;             // nu <= mu / sqrt(M)
  std::pair<Index, Index> argmax_pair{0, 0};
  bool normalized = false;       // columns were rescaled to unit norm first
};

// All quantities refer to the frame with unit-norm columns. The pair scan
// is split across threads but reduced in column order, so the report does
// not depend on the thread count.
CoherenceReport coherence_report(const Frame& frame);

double worst_case_coherence(const Frame& frame);
double average_coherence(const Frame& frame);

// sqrt((N - M) / (M (N - 1))). Requires n >= m >= 1.
double welch_lower_bound(Index m, Index n);

struct AsymptoticBounds {
  double complex_bound = 0.0;         // 1 - 2 N^{-1/(M-1)}
  double real_bound = 0.0;            // spherical-cap bound for real frames
  std::optional<double> dim3_bound;   // 1 - 4/N + 2/N^2, only for M = 3
};
// Requires n >= m >= 2. The real and M = 3 bounds apply to real frames;
// complex frames can beat them.
AsymptoticBounds asymptotic_lower_bounds(Index m, Index n);

struct NuConditions {
  bool cond_i = false;    // <phi_k, sum phi> = N/M for every k
  bool cond_ii = false;   // N >= 2M and sum phi = 0
  bool cond_iii = false;  // N >= M^2 + 3M + 3 and ||sum phi||^2 <= N
  bool any() const noexcept { return cond_i || cond_ii || cond_iii; }
};
// Each condition implies nu <= mu / sqrt(M). Requires a unit-norm frame.
NuConditions check_nu_sufficient_conditions(const Frame& frame);

std::string to_key_value(const CoherenceReport& report);
std::string to_json(const CoherenceReport& report);

// Column-normalized copy of the matrix.
Matrix normalized_columns(const Matrix& m);

}  // namespace frameforge
