// Copyright 2026 The frameforge Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "frameforge/frame.hpp"
#include "frameforge/rip.hpp"

namespace frameforge {

// A column subset counts as dependent when its smallest singular value is
// below this fraction of its largest (or, for square DFT minors, when
// |det| falls below it after dividing by the product of column norms).
inline constexpr double kDependenceTolerance = 1e-9;

enum class SparkMethod { kBrute, kDftUniform, kVandermondeRule };
std::string_view to_string(SparkMethod method) noexcept;

struct SparkReport {
  Index spark = 0;  // M + 1 when full spark
  bool full_spark = false;
  std::optional<IndexList> witness;  // a minimal dependent column subset
  SparkMethod method = SparkMethod::kBrute;
};

// Smallest dependent column subset, searched by size from 2 upward in
// lexicographic order; the first dependent subset found is the witness.
// Throws BudgetExceeded when the remaining sizes would exceed the budget.
SparkReport spark(const Frame& frame, std::uint64_t budget = kDefaultBudget);

// Vandermonde frames are full spark exactly when their bases are
// distinct; otherwise two equal columns form the witness.
SparkReport vandermonde_spark(std::span<const Complex> bases, Index m);

enum class FullSparkVerdict { kFullSpark, kNotFullSpark, kNecessaryConditionOnly };
std::string_view to_string(FullSparkVerdict verdict) noexcept;

struct DftSparkResult {
  FullSparkVerdict verdict = FullSparkVerdict::kNecessaryConditionOnly;
  std::string method;  // "chebotarev", "uniform", "brute", "none"
  bool uniform = false;
  std::optional<Index> failing_divisor;
  std::optional<IndexList> witness;  // singular column subset, brute only
};

// True when, for every divisor d of n, the residues of rows mod d hit each
// class floor(|rows|/d) or ceil(|rows|/d) times. Reports the first
// failing divisor.
bool uniformly_distributed(Index n, const IndexList& rows, Index* failing_divisor = nullptr);

inline constexpr Index kBruteDftMaxN = 16;

// Whether the harmonic frame on `rows` of the n-point DFT is full spark.
// Prime n: always. Prime powers: exactly when the rows are uniformly
// distributed. Other n: uniform distribution is necessary only; when it
// holds and n <= 16, every square minor is checked (on the smaller of the
// row set and its complement).
DftSparkResult dft_full_spark_test(Index n, IndexList rows, bool brute_fallback = true);

// Exhaustive minor scan on the row set itself; the first singular column
// subset in lexicographic order, if any.
std::optional<IndexList> dft_singular_columns(Index n, const IndexList& rows);

// Closure maps on row sets of Z_n; results are sorted.
IndexList translate_rows(const IndexList& rows, Index shift, Index n);
IndexList scale_rows(const IndexList& rows, Index unit, Index n);
IndexList complement_rows(const IndexList& rows, Index n);

// One-line summary such as
// "necessary condition passes; brute force: NOT full spark; witness columns 0,1,2,6".
std::string describe(const DftSparkResult& result);

}  // namespace frameforge
