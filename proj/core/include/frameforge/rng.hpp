// Copyright 2026 The frameforge Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>

#include "frameforge/types.hpp"

namespace frameforge {

// xoshiro256** seeded through splitmix64. Every transform below is spelled
// out here instead of delegating to <random> distributions, whose output
// differs between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) noexcept;

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next_u64() noexcept;
  double uniform() noexcept;  // [0, 1), 53 random bits
  double normal() noexcept;   // standard normal, Box-Muller
  // Circular complex Gaussian with E|z|^2 = variance.
  Complex complex_normal(double variance) noexcept;
  // Uniform integer in [0, bound), rejection sampled.
  std::uint64_t below(std::uint64_t bound) noexcept;

  template <typename T>
  void shuffle(std::span<T> items) noexcept {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

  // Sorted uniformly random k-subset of {0, ..., n-1}.
  IndexList subset(Index n, Index k) noexcept;

  // Seed for an independent stream, e.g. one per Monte Carlo trial.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) noexcept;

 private:
  std::uint64_t seed_;
  std::array<std::uint64_t, 4> state_{};
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace frameforge
