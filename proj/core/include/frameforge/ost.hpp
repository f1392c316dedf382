// Copyright 2026 The frameforge Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "frameforge/frame.hpp"
#include "frameforge/rng.hpp"

namespace frameforge {

class SparseSignal {
 public:
  // Throws InvalidArgument for repeated or out-of-range indices, or when
  // the index and value counts differ.
  SparseSignal(Index n, IndexList support, std::vector<Complex> values);

  // Support drawn uniformly among k-subsets; every entry has the given
  // magnitude and a uniformly random phase.
  static SparseSignal random_equal_magnitude(Index n, Index k, double magnitude, Rng& rng);

  Index size() const noexcept { return n_; }
  const IndexList& support() const noexcept { return support_; }
  const std::vector<Complex>& values() const noexcept { return values_; }
  Vector dense() const;
  double energy() const noexcept;

 private:
  Index n_;
  IndexList support_;  // ascending
  std::vector<Complex> values_;
};

// y = Phi x + z with circular complex Gaussian z of total variance sigma^2
// per entry.
Vector measure(const Frame& frame, const SparseSignal& x, double sigma, Rng& rng);

struct OstResult {
  IndexList estimated_support;
  Vector estimate;     // zero off the estimated support
  Vector proxy;        // Phi* y
  double threshold = 0.0;
  // The selected columns failed rank certification; the estimate is the
  // proxy restricted to the selection instead of a least-squares refit.
  bool rank_deficient_selection = false;
};

// One-step thresholding: keep n with |(Phi* y)_n| > lambda (strictly) and
// refit by least squares on those columns.
OstResult ost(const Frame& frame, const Vector& y, double lambda);

struct ThresholdRule {
  double lambda = 0.0;
  double coherence_branch = 0.0;  // sqrt(2 s^2 ln N) (10/t) mu sqrt(M snr)
  double noise_branch = 0.0;      // sqrt(2 s^2 ln N) sqrt(2) / (1 - t)
};
// Threshold of the recovery guarantee. The frame's worst-case coherence
// is measured directly.
ThresholdRule threshold_rule(const Frame& frame, double sigma, double snr, double t);
// ||x||^2 / (M sigma^2).
double signal_to_noise(const SparseSignal& x, Index m, double sigma);

inline constexpr double kOstC1 = 37.0 * 2.718281828459045;
double ost_c2();
double ost_c3();

// c2 sqrt(sigma^2 k_hat ln N) + c3 residual, with residual the norm of the
// missed part of x.
double recovery_error_bound(Index k_hat, double sigma, Index n, double residual);

// Largest sparsity the guarantee covers: N / (c1^2 ||Phi||^2 ln N).
double ost_sparsity_limit(const Frame& frame);

struct SupportFlags {
  bool subset_of_true = false;  // estimated support inside the true support
  bool contains_t = false;      // every index above both floors selected
  Index t = 0;                  // how many indices clear both floors
};
// Floors: noise 2 sqrt(2)/(1 - t) sqrt(2 sigma^2 ln N) and
// self-interference (20/t) mu ||x|| sqrt(2 ln N).
SupportFlags support_flags(const Frame& frame, const SparseSignal& x, const OstResult& result,
                           double sigma, double t);

struct OstTrial {
  std::uint64_t seed = 0;
  Index k = 0;
  double lambda = 0.0;
  bool exact_support = false;
  bool subset_of_true = false;
  bool contains_t = false;
  double l2_error = 0.0;
  double bound = 0.0;
  bool within_bound = false;
};

struct OstExperiment {
  Index k = 3;
  double magnitude = 1.0;  // common magnitude of the nonzero entries
  double sigma = 1.0;
  double t = 0.5;
  Index trials = 200;
  std::uint64_t seed = 0;
};
// Trial i uses Rng(derive(seed, i)) for both the signal and the noise.
std::vector<OstTrial> run_ost_experiment(const Frame& frame, const OstExperiment& setup);

}  // namespace frameforge
