// Copyright 2026 The frameforge Authors.
// SPDX-License-Identifier: Apache-2.0

#include "frameforge/ost.hpp"

#include <algorithm>
#include <cmath>

#include "frameforge/coherence.hpp"
#include "frameforge/error.hpp"
#include "frameforge/numerics.hpp"
#include "frameforge/parallel.hpp"

namespace frameforge {

SparseSignal::SparseSignal(Index n, IndexList support, std::vector<Complex> values)
    : n_(n), support_(std::move(support)), values_(std::move(values)) {
  require(n_ >= 1, ErrorCode::kInvalidArgument, "signal length must be positive");
  require(support_.size() == values_.size(), ErrorCode::kInvalidArgument,
          "support and values differ in length");
  std::vector<std::size_t> order(support_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return support_[a] < support_[b]; });
  IndexList s;
  std::vector<Complex> v;
  for (auto i : order) {
    s.push_back(support_[i]);
    v.push_back(values_[i]);
  }
  support_ = std::move(s);
  values_ = std::move(v);
  require(std::adjacent_find(support_.begin(), support_.end()) == support_.end(),
          ErrorCode::kInvalidArgument, "support has repeated indices");
  require(support_.empty() || (support_.front() >= 0 && support_.back() < n_),
          ErrorCode::kInvalidArgument, "support index out of range");
}

SparseSignal SparseSignal::random_equal_magnitude(Index n, Index k, double magnitude, Rng& rng) {
  require(k >= 0 && k <= n, ErrorCode::kInvalidArgument, "sparsity out of range");
  IndexList support = rng.subset(n, k);
  std::vector<Complex> values;
  for (Index i = 0; i < k; ++i) values.push_back(std::polar(magnitude, 2.0 * kPi * rng.uniform()));
  return {n, std::move(support), std::move(values)};
}

Vector SparseSignal::dense() const {
  Vector x = Vector::Zero(n_);
  for (std::size_t i = 0; i < support_.size(); ++i) x(support_[i]) = values_[i];
  return x;
}

double SparseSignal::energy() const noexcept {
  double e = 0.0;
  for (const Complex& v : values_) e += std::norm(v);
  return e;
}

Vector measure(const Frame& frame, const SparseSignal& x, double sigma, Rng& rng) {
  require(sigma >= 0.0, ErrorCode::kInvalidArgument, "sigma must be nonnegative");
  require(x.size() == frame.cols(), ErrorCode::kInvalidArgument, "signal length differs from N");
  Vector y = Vector::Zero(frame.rows());
  for (std::size_t i = 0; i < x.support().size(); ++i) {
    y += x.values()[i] * frame.matrix().col(x.support()[i]);
  }
  if (sigma > 0.0) {
    for (Index i = 0; i < y.size(); ++i) y(i) += rng.complex_normal(sigma * sigma);
  }
  return y;
}

OstResult ost(const Frame& frame, const Vector& y, double lambda) {
  require(lambda > 0.0, ErrorCode::kInvalidArgument, "threshold must be positive");
  require(y.size() == frame.rows(), ErrorCode::kInvalidArgument, "measurement length differs from M");
  OstResult r;
  r.threshold = lambda;
  r.proxy = frame.matrix().adjoint() * y;
  for (Index n = 0; n < r.proxy.size(); ++n) {
    if (std::abs(r.proxy(n)) > lambda) r.estimated_support.push_back(n);
  }
  r.estimate = Vector::Zero(frame.cols());
  if (r.estimated_support.empty()) return r;
  try {
    const Vector coeffs = least_squares(select_columns(frame.matrix(), r.estimated_support), y);
    for (std::size_t i = 0; i < r.estimated_support.size(); ++i) {
      r.estimate(r.estimated_support[i]) = coeffs(static_cast<Index>(i));
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kRankDeficient) throw;
    r.rank_deficient_selection = true;
    for (Index n : r.estimated_support) r.estimate(n) = r.proxy(n);
  }
  return r;
}

ThresholdRule threshold_rule(const Frame& frame, double sigma, double snr, double t) {
  require(sigma > 0.0, ErrorCode::kInvalidArgument, "sigma must be positive");
  require(t > 0.0 && t < 1.0, ErrorCode::kInvalidArgument, "t must lie in (0, 1)");
  require(snr >= 0.0, ErrorCode::kInvalidArgument, "snr must be nonnegative");
  const double mu = worst_case_coherence(frame);
  const double base = std::sqrt(2.0 * sigma * sigma * std::log(static_cast<double>(frame.cols())));
  ThresholdRule r;
  r.coherence_branch = base * (10.0 / t) * mu * std::sqrt(static_cast<double>(frame.rows()) * snr);
  r.noise_branch = base * std::sqrt(2.0) / (1.0 - t);
  r.lambda = std::max(r.coherence_branch, r.noise_branch);
  return r;
}

double signal_to_noise(const SparseSignal& x, Index m, double sigma) {
  require(sigma > 0.0 && m >= 1, ErrorCode::kInvalidArgument, "need sigma > 0 and m >= 1");
  return x.energy() / (static_cast<double>(m) * sigma * sigma);
}

double ost_c2() { return 2.0 / (1.0 - std::exp(-0.5)); }
double ost_c3() { return 1.0 + std::exp(-0.5) / (1.0 - std::exp(-0.5)); }

double recovery_error_bound(Index k_hat, double sigma, Index n, double residual) {
  require(k_hat >= 0 && sigma >= 0.0 && n >= 1 && residual >= 0.0, ErrorCode::kInvalidArgument,
          "bound inputs must be nonnegative");
  const double log_n = std::log(static_cast<double>(n));
  return ost_c2() * std::sqrt(sigma * sigma * static_cast<double>(k_hat) * log_n) +
         ost_c3() * residual;
}

double ost_sparsity_limit(const Frame& frame) {
  const double norm = spectral_norm(frame.matrix());
  const double nd = static_cast<double>(frame.cols());
  return nd / (kOstC1 * kOstC1 * norm * norm * std::log(nd));
}

SupportFlags support_flags(const Frame& frame, const SparseSignal& x, const OstResult& result,
                           double sigma, double t) {
  const double log_n = std::log(static_cast<double>(frame.cols()));
  const double noise_floor = 2.0 * std::sqrt(2.0) / (1.0 - t) * std::sqrt(2.0 * sigma * sigma * log_n);
  const double mu = worst_case_coherence(frame);
  const double interference_floor = 20.0 / t * mu * std::sqrt(x.energy()) * std::sqrt(2.0 * log_n);
  SupportFlags f;
  f.subset_of_true = std::includes(x.support().begin(), x.support().end(),
                                   result.estimated_support.begin(), result.estimated_support.end());
  f.contains_t = true;
  for (std::size_t i = 0; i < x.support().size(); ++i) {
    const double a = std::abs(x.values()[i]);
    if (a > noise_floor && a > interference_floor) {
      ++f.t;
      if (!std::binary_search(result.estimated_support.begin(), result.estimated_support.end(),
                              x.support()[i])) {
        f.contains_t = false;
      }
    }
  }
  return f;
}

std::vector<OstTrial> run_ost_experiment(const Frame& frame, const OstExperiment& setup) {
  require(setup.trials >= 1, ErrorCode::kInvalidArgument, "need at least one trial");
  const Index n = frame.cols();
  const Index m = frame.rows();
  std::vector<OstTrial> out(static_cast<std::size_t>(setup.trials));
  const double mu = worst_case_coherence(frame);
  for_each_chunk(out.size(), [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      OstTrial& trial = out[i];
      trial.seed = Rng::derive(setup.seed, i);
      trial.k = setup.k;
      Rng rng(trial.seed);
      const SparseSignal x = SparseSignal::random_equal_magnitude(n, setup.k, setup.magnitude, rng);
      const Vector y = measure(frame, x, setup.sigma, rng);
      // Same formula as threshold_rule, with mu hoisted out of the loop.
      const double snr = signal_to_noise(x, m, setup.sigma);
      const double base = std::sqrt(2.0 * setup.sigma * setup.sigma * std::log(static_cast<double>(n)));
      trial.lambda = std::max(base * (10.0 / setup.t) * mu * std::sqrt(static_cast<double>(m) * snr),
                              base * std::sqrt(2.0) / (1.0 - setup.t));
      const OstResult r = ost(frame, y, trial.lambda);
      trial.exact_support = r.estimated_support == x.support();
      const SupportFlags flags = support_flags(frame, x, r, setup.sigma, setup.t);
      trial.subset_of_true = flags.subset_of_true;
      trial.contains_t = flags.contains_t;
      trial.l2_error = (x.dense() - r.estimate).norm();
      double missed = 0.0;
      for (std::size_t j = 0; j < x.support().size(); ++j) {
        if (!std::binary_search(r.estimated_support.begin(), r.estimated_support.end(), x.support()[j])) {
          missed += std::norm(x.values()[j]);
        }
      }
      trial.bound = recovery_error_bound(static_cast<Index>(r.estimated_support.size()), setup.sigma, n,
                                         std::sqrt(missed));
      trial.within_bound = trial.l2_error <= trial.bound;
    }
  });
  return out;
}

}  // namespace frameforge
