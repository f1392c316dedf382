// Copyright 2026 The frameforge Authors.
// SPDX-License-Identifier: Apache-2.0

#include "frameforge/fingerprint.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "frameforge/coherence.hpp"
#include "frameforge/constructions.hpp"
#include "frameforge/error.hpp"
#include "frameforge/parallel.hpp"
#include "frameforge/rng.hpp"
#include "frameforge/subsets.hpp"

namespace frameforge {
namespace {

RealMatrix real_unit_columns(const Frame& frame) {
  const Frame real = frame.tags().real || is_real(frame.matrix()) ? frame : real_form(frame);
  return normalized_columns(real.matrix()).real();
}

}  // namespace

double q_function(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

std::vector<double> equal_weights(Index k) {
  require(k >= 1, ErrorCode::kInvalidArgument, "coalition must be nonempty");
  return std::vector<double>(static_cast<std::size_t>(k), 1.0 / static_cast<double>(k));
}

void validate(const CollusionScenario& s) {
  require(!s.coalition.empty(), ErrorCode::kInvalidArgument, "coalition must be nonempty");
  require(s.weights.size() == s.coalition.size(), ErrorCode::kInvalidArgument,
          "one weight per coalition member");
  IndexList sorted = s.coalition;
  std::sort(sorted.begin(), sorted.end());
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() && sorted.front() >= 0 &&
              sorted.back() < s.frame.cols(),
          ErrorCode::kInvalidArgument, "coalition members must be distinct users");
  double total = 0.0;
  for (double w : s.weights) {
    require(w >= 0.0, ErrorCode::kInvalidArgument, "weights must be nonnegative");
    total += w;
  }
  require(std::abs(total - 1.0) <= 1e-12, ErrorCode::kInvalidArgument, "weights must sum to 1");
  require(s.gamma > 0.0 && s.sigma >= 0.0, ErrorCode::kInvalidArgument,
          "need gamma > 0 and sigma >= 0");
  (void)real_unit_columns(s.frame);
}

DetectionRates simulate_detection(const CollusionScenario& s, Index trials, std::uint64_t seed) {
  validate(s);
  require(trials >= 1, ErrorCode::kInvalidArgument, "need at least one trial");
  const RealMatrix phi = real_unit_columns(s.frame);
  const Index m = phi.rows();
  const Index n = phi.cols();
  RealVector mix = RealVector::Zero(m);
  for (std::size_t i = 0; i < s.coalition.size(); ++i) mix += s.weights[i] * phi.col(s.coalition[i]);
  // T_n = <gamma mix + z, gamma phi_n> / gamma^2 = <mix, phi_n> + <z, phi_n> / gamma.
  const RealVector mean = phi.transpose() * mix;

  const std::size_t chunks = chunk_count(static_cast<std::size_t>(trials));
  std::vector<std::vector<Index>> accused(chunks, std::vector<Index>(static_cast<std::size_t>(n), 0));
  for_each_chunk(static_cast<std::size_t>(trials), [&](std::size_t c, std::size_t begin, std::size_t end) {
    RealVector z(m);
    for (std::size_t t = begin; t < end; ++t) {
      Rng rng(Rng::derive(seed, t));
      for (Index i = 0; i < m; ++i) z(i) = s.sigma * rng.normal();
      const RealVector stat = mean + phi.transpose() * z / s.gamma;
      for (Index u = 0; u < n; ++u) {
        if (stat(u) >= s.tau) ++accused[c][static_cast<std::size_t>(u)];
      }
    }
  });
  std::vector<Index> counts(static_cast<std::size_t>(n), 0);
  for (const auto& part : accused) {
    for (Index u = 0; u < n; ++u) counts[static_cast<std::size_t>(u)] += part[static_cast<std::size_t>(u)];
  }
  DetectionRates r;
  r.trials = trials;
  r.false_positive.assign(static_cast<std::size_t>(n), 0.0);
  const double td = static_cast<double>(trials);
  std::vector<bool> guilty(static_cast<std::size_t>(n), false);
  for (Index k : s.coalition) guilty[static_cast<std::size_t>(k)] = true;
  r.pi = 0.0;
  for (Index u = 0; u < n; ++u) {
    if (guilty[static_cast<std::size_t>(u)]) continue;
    r.false_positive[static_cast<std::size_t>(u)] = static_cast<double>(counts[static_cast<std::size_t>(u)]) / td;
    r.pi = std::max(r.pi, r.false_positive[static_cast<std::size_t>(u)]);
  }
  r.pii = 1.0;
  for (Index k : s.coalition) {
    const double miss = 1.0 - static_cast<double>(counts[static_cast<std::size_t>(k)]) / td;
    r.miss.push_back(miss);
    r.pii = std::min(r.pii, miss);
  }
  return r;
}

DetectionBounds theoretical_bounds(const CollusionScenario& s) {
  validate(s);
  DetectionBounds b;
  b.mu = s.mu ? *s.mu : worst_case_coherence(s.frame);
  const double ratio = s.gamma / s.sigma;
  const double top = *std::max_element(s.weights.begin(), s.weights.end());
  b.pi_bound = q_function(ratio * (s.tau - b.mu));
  b.pii_bound = q_function(ratio * ((1.0 + b.mu) * top - b.mu - s.tau));
  return b;
}

double guilt_distance(const Frame& frame, Index k, Index n) {
  const Index users = frame.cols();
  require(users <= 14 && k >= 1 && k <= 4, ErrorCode::kUnsupportedSize,
          "guilt distance enumeration needs N <= 14 and 1 <= k <= 4");
  require(n >= 0 && n < users, ErrorCode::kInvalidArgument, "user index out of range");
  require(users >= 2, ErrorCode::kInvalidArgument, "need at least two users");
  const Matrix phi = normalized_columns(frame.matrix());
  std::vector<Vector> guilty;
  std::vector<Vector> innocent;
  for (Index size = 1; size <= std::min(k, users); ++size) {
    IndexList s = first_combination(size);
    do {
      Vector centroid = Vector::Zero(phi.rows());
      for (Index i : s) centroid += phi.col(i);
      centroid /= static_cast<double>(size);
      const bool has_n = std::binary_search(s.begin(), s.end(), n);
      (has_n ? guilty : innocent).push_back(std::move(centroid));
    } while (next_combination(s, users));
  }
  double best = std::numeric_limits<double>::infinity();
  for (const Vector& g : guilty) {
    for (const Vector& h : innocent) best = std::min(best, (g - h).norm());
  }
  return best;
}

double simplex_guilt_distance(Index n, Index k) {
  require(n >= 2 && k >= 2, ErrorCode::kInvalidArgument, "need N >= 2 and K >= 2");
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  return std::sqrt(nd / (kd * (kd - 1.0) * (nd - 1.0)));
}

}  // namespace frameforge
