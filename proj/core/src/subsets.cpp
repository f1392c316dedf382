// Copyright 2026 The frameforge Authors.
// SPDX-License-Identifier: Apache-2.0

#include "frameforge/subsets.hpp"

#include <algorithm>
#include <numeric>

namespace frameforge {
namespace {
__extension__ typedef unsigned __int128 Wide;
}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Wide result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(result);
}

IndexList first_combination(Index k) {
  IndexList subset(static_cast<std::size_t>(k));
  std::iota(subset.begin(), subset.end(), Index{0});
  return subset;
}

bool next_combination(IndexList& subset, Index n) noexcept {
  const auto k = static_cast<Index>(subset.size());
  Index i = k - 1;
  while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - k + i) --i;
  if (i < 0) return false;
  ++subset[static_cast<std::size_t>(i)];
  for (Index j = i + 1; j < k; ++j) {
    subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
  }
  return true;
}

IndexList unrank_combination(Index n, Index k, std::uint64_t rank) {
  IndexList subset;
  subset.reserve(static_cast<std::size_t>(k));
  Index next = 0;
  for (Index slot = 0; slot < k; ++slot) {
    for (Index candidate = next;; ++candidate) {
      const auto rest = binomial(static_cast<std::uint64_t>(n - candidate - 1),
                                 static_cast<std::uint64_t>(k - slot - 1));
      if (rank < rest) {
        subset.push_back(candidate);
        next = candidate + 1;
        break;
      }
      rank -= rest;
    }
  }
  return subset;
}

IndexList complement(const IndexList& sorted, Index n) {
  IndexList out;
  std::size_t pos = 0;
  for (Index i = 0; i < n; ++i) {
    if (pos < sorted.size() && sorted[pos] == i) {
      ++pos;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

}  // namespace frameforge
