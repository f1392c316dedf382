// Copyright 2026 The frameforge Authors.
// SPDX-License-Identifier: Apache-2.0

#include "frameforge/hadamard.hpp"

#include <bit>
#include <string>

#include "frameforge/error.hpp"

namespace frameforge {

std::string_view to_string(HadamardKind kind) noexcept {
  return kind == HadamardKind::kRealSylvester ? "real" : "complex";
}

std::optional<HadamardKind> parse_hadamard_kind(std::string_view text) noexcept {
  if (text == "real" || text == "real_sylvester" || text == "sylvester") {
    return HadamardKind::kRealSylvester;
  }
  if (text == "complex" || text == "complex_dft" || text == "dft") {
    return HadamardKind::kComplexDft;
  }
  return std::nullopt;
}

bool hadamard_available(Index size, HadamardKind kind) noexcept {
  if (size < 1) return false;
  if (kind == HadamardKind::kComplexDft) return true;
  return std::has_single_bit(static_cast<unsigned long long>(size));
}

Matrix hadamard(Index size, HadamardKind kind) {
  require(hadamard_available(size, kind), ErrorCode::kUnsupportedSize,
          "no " + std::string(to_string(kind)) + " Hadamard matrix of size " +
              std::to_string(size));
  Matrix h(size, size);
  for (Index i = 0; i < size; ++i) {
    for (Index j = 0; j < size; ++j) {
      if (kind == HadamardKind::kRealSylvester) {
        const int bits = std::popcount(static_cast<unsigned long long>(i & j));
        h(i, j) = (bits % 2 == 0) ? 1.0 : -1.0;
      } else {
        h(i, j) = root_of_unity(-i * j, size);
      }
    }
  }
  return h;
}

}  // namespace frameforge
