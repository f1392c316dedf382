// Copyright 2026 The frameforge Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <limits>

#include "frameforge/types.hpp"

namespace frameforge {

inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

// n choose k, saturating at kSaturated.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

// Lexicographic k-subsets of {0, ..., n-1}.
IndexList first_combination(Index k);
// Advances to the next subset; false once the last one has been passed.
bool next_combination(IndexList& subset, Index n) noexcept;
// The subset at position `rank` in lexicographic order.
IndexList unrank_combination(Index n, Index k, std::uint64_t rank);

// Elements of {0, ..., n-1} not in the sorted list.
IndexList complement(const IndexList& sorted, Index n);

}  // namespace frameforge
