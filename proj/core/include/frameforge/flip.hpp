// Copyright 2026 The frameforge Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "frameforge/frame.hpp"

namespace frameforge {

// Unimodular column multipliers. Sign patterns (entries +-1) print as
// strings over {+, -}.
class FlipPattern {
 public:
  explicit FlipPattern(std::vector<Complex> signs);
  static FlipPattern all_plus(Index n);
  static FlipPattern parse(std::string_view text);  // "+-+..."; throws Parse

  Index size() const noexcept { return static_cast<Index>(signs_.size()); }
  const std::vector<Complex>& signs() const noexcept { return signs_; }
  bool is_sign_pattern() const noexcept;
  std::string str() const;  // throws InvalidArgument unless a sign pattern

  friend bool operator==(const FlipPattern&, const FlipPattern&) = default;

 private:
  std::vector<Complex> signs_;
};

// Phi D with D = diag(pattern).
Frame apply_pattern(const Frame& frame, const FlipPattern& pattern);

struct FlipResult {
  Frame frame;
  FlipPattern pattern;
  // ||psi_1 + ... + psi_k||^2 for k = 1..N; each is at most k.
  std::vector<double> partial_sums;
};

// Greedy pass: each column after the first is negated when that makes the
// running sum strictly shorter. Requires unit-norm columns.
FlipResult linear_time_flip(const Frame& frame);

struct ExhaustiveFlipResult {
  FlipPattern pattern;
  double nu = 0.0;
};

inline constexpr Index kExhaustiveFlipMaxN = 22;

// Minimum average coherence over all sign patterns with the first sign
// fixed to +. Patterns are visited in Gray-code order; the first minimizer
// wins.
ExhaustiveFlipResult exhaustive_flip(const Frame& frame);

}  // namespace frameforge
