// Copyright 2026 The frameforge Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string_view>

#include "frameforge/types.hpp"

namespace frameforge {

enum class HadamardKind { kRealSylvester, kComplexDft };

std::string_view to_string(HadamardKind kind) noexcept;
std::optional<HadamardKind> parse_hadamard_kind(std::string_view text) noexcept;

// Square matrix with unimodular entries and H H* = size I.
// kRealSylvester: entry (i, j) = (-1)^{popcount(i & j)}, size a power of 2.
// kComplexDft: entry (j, k) = e^{-2 pi i jk / size}.
// Throws UnsupportedSize.
Matrix hadamard(Index size, HadamardKind kind);

bool hadamard_available(Index size, HadamardKind kind) noexcept;

}  // namespace frameforge
