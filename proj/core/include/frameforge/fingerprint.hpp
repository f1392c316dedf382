// Copyright 2026 The frameforge Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "frameforge/frame.hpp"

namespace frameforge {

// Standard normal upper tail, 0.5 erfc(x / sqrt(2)).
double q_function(double x);

// Fingerprints are gamma times the unit-norm columns of a real frame.
// Coalition members mix their fingerprints with the given weights and the
// result is hit by real Gaussian noise of variance sigma^2 per entry.
struct CollusionScenario {
  Frame frame;
  double gamma = 1.0;
  IndexList coalition;
  std::vector<double> weights;
  double sigma = 1.0;
  double tau = 0.5;
  std::optional<double> mu;  // worst-case coherence; measured when absent
};

// Throws InvalidArgument for weights that are negative, do not sum to 1
// within 1e-12, or do not match the coalition, and for frames without a
// real form.
void validate(const CollusionScenario& scenario);

// Equal weights 1/K on the coalition.
std::vector<double> equal_weights(Index k);

struct DetectionRates {
  double pi = 0.0;   // worst innocent: largest false-accusation rate
  double pii = 0.0;  // best colluder: smallest miss rate
  Index trials = 0;
  std::vector<double> false_positive;  // per user, zero for colluders
  std::vector<double> miss;            // per coalition member
};

// Focused correlation detector: user n is accused when
// T_n = <y, s_n> / ||s_n||^2 >= tau. Trial t draws from
// Rng(derive(seed, t)), so the rates do not depend on the thread count.
DetectionRates simulate_detection(const CollusionScenario& scenario, Index trials,
                                  std::uint64_t seed);

struct DetectionBounds {
  double pi_bound = 0.0;   // Q((gamma/sigma)(tau - mu))
  double pii_bound = 0.0;  // Q((gamma/sigma)((1 + mu) max x - mu - tau))
  double mu = 0.0;
};
DetectionBounds theoretical_bounds(const CollusionScenario& scenario);

// Least distance between an equal-weight average of at most k fingerprints
// that includes user n and one that does not, by enumeration. Requires
// N <= 14 and k <= 4.
double guilt_distance(const Frame& frame, Index k, Index n);

// sqrt(N / (K (K - 1) (N - 1))), the value for simplex fingerprints.
double simplex_guilt_distance(Index n, Index k);

}  // namespace frameforge
