// Copyright 2026 The frameforge Authors.
// SPDX-License-Identifier: Apache-2.0

#include "frameforge/spark.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#include <Eigen/LU>

#include "frameforge/error.hpp"
#include "frameforge/finite_field.hpp"
#include "frameforge/numerics.hpp"
#include "frameforge/parallel.hpp"
#include "frameforge/subsets.hpp"

namespace frameforge {
namespace {

std::string join(const IndexList& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

IndexList sorted_rows(IndexList rows, Index n) {
  require(n >= 1, ErrorCode::kInvalidArgument, "DFT size must be positive");
  require(!rows.empty(), ErrorCode::kEmptyRowSet, "row set is empty");
  for (auto& r : rows) r = ((r % n) + n) % n;
  std::sort(rows.begin(), rows.end());
  require(std::adjacent_find(rows.begin(), rows.end()) == rows.end(), ErrorCode::kInvalidArgument,
          "row set has repeated indices mod " + std::to_string(n));
  return rows;
}

// First k-subset in lexicographic order satisfying pred; chunks run in
// parallel but a chunk stops once an earlier chunk has a hit.
template <typename Pred>
std::optional<IndexList> first_subset(Index n, Index k, Pred&& pred) {
  const std::uint64_t total = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
  const std::size_t chunks = chunk_count(static_cast<std::size_t>(total));
  std::vector<std::optional<IndexList>> hits(chunks);
  std::atomic<std::size_t> first_hit{chunks};
  for_each_chunk(static_cast<std::size_t>(total), [&](std::size_t c, std::size_t begin, std::size_t end) {
    if (begin == end) return;
    IndexList s = unrank_combination(n, k, begin);
    for (std::size_t rank = begin; rank < end; ++rank) {
      if (first_hit.load(std::memory_order_relaxed) < c) return;
      if (pred(s)) {
        hits[c] = s;
        std::size_t seen = first_hit.load();
        while (c < seen && !first_hit.compare_exchange_weak(seen, c)) {
        }
        return;
      }
      next_combination(s, n);
    }
  });
  for (auto& h : hits) {
    if (h) return h;
  }
  return std::nullopt;
}

bool dft_minor_singular(Index n, const IndexList& rows, const IndexList& cols) {
  const auto m = static_cast<Index>(rows.size());
  Matrix minor(m, m);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) {
      minor(i, j) = root_of_unity(-rows[static_cast<std::size_t>(i)] * cols[static_cast<std::size_t>(j)], n);
    }
  }
  // Columns have norm sqrt(m); Hadamard's inequality bounds |det| by m^{m/2}.
  const double scale = std::pow(static_cast<double>(m), 0.5 * static_cast<double>(m));
  return std::abs(minor.partialPivLu().determinant()) / scale < kDependenceTolerance;
}

}  // namespace

std::string_view to_string(SparkMethod method) noexcept {
  switch (method) {
    case SparkMethod::kBrute: return "brute";
    case SparkMethod::kDftUniform: return "dft_uniform";
    case SparkMethod::kVandermondeRule: return "vandermonde_rule";
  }
  return "unknown";
}

std::string_view to_string(FullSparkVerdict verdict) noexcept {
  switch (verdict) {
    case FullSparkVerdict::kFullSpark: return "full_spark";
    case FullSparkVerdict::kNotFullSpark: return "not_full_spark";
    case FullSparkVerdict::kNecessaryConditionOnly: return "necessary_condition_only";
  }
  return "unknown";
}

SparkReport spark(const Frame& frame, std::uint64_t budget) {
  const Matrix& a = frame.matrix();
  const Index m = frame.rows();
  const Index n = frame.cols();
  SparkReport r;
  r.method = SparkMethod::kBrute;
  std::uint64_t spent = 0;
  for (Index size = 2; size <= std::min(m, n); ++size) {
    const std::uint64_t count = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(size));
    require(count <= budget && spent <= budget - count, ErrorCode::kBudgetExceeded,
            "spark search at size " + std::to_string(size) + " exceeds the budget of " +
                std::to_string(budget) + " subsets");
    spent += count;
    auto witness = first_subset(n, size, [&](const IndexList& s) {
      return columns_dependent(select_columns(a, s), kDependenceTolerance);
    });
    if (witness) {
      r.spark = size;
      r.witness = std::move(witness);
      return r;
    }
  }
  r.spark = m + 1;
  r.full_spark = true;
  if (n > m) r.witness = first_combination(m + 1);
  return r;
}

SparkReport vandermonde_spark(std::span<const Complex> bases, Index m) {
  require(m >= 1, ErrorCode::kInvalidArgument, "Vandermonde needs m >= 1");
  SparkReport r;
  r.method = SparkMethod::kVandermondeRule;
  const auto n = static_cast<Index>(bases.size());
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (bases[static_cast<std::size_t>(i)] == bases[static_cast<std::size_t>(j)]) {
        r.spark = 2;
        r.witness = IndexList{i, j};
        return r;
      }
    }
  }
  r.spark = m + 1;
  r.full_spark = true;
  return r;
}

bool uniformly_distributed(Index n, const IndexList& rows, Index* failing_divisor) {
  const auto size = static_cast<Index>(rows.size());
  for (Index d = 2; d <= n; ++d) {
    if (n % d != 0) continue;
    std::vector<Index> counts(static_cast<std::size_t>(d), 0);
    for (Index r : rows) ++counts[static_cast<std::size_t>(((r % d) + d) % d)];
    const Index lo = size / d;
    const Index hi = (size + d - 1) / d;
    for (Index c : counts) {
      if (c < lo || c > hi) {
        if (failing_divisor) *failing_divisor = d;
        return false;
      }
    }
  }
  return true;
}

std::optional<IndexList> dft_singular_columns(Index n, const IndexList& rows) {
  const IndexList r = sorted_rows(rows, n);
  return first_subset(n, static_cast<Index>(r.size()),
                      [&](const IndexList& cols) { return dft_minor_singular(n, r, cols); });
}

DftSparkResult dft_full_spark_test(Index n, IndexList rows, bool brute_fallback) {
  rows = sorted_rows(std::move(rows), n);
  DftSparkResult out;
  Index bad = 0;
  out.uniform = uniformly_distributed(n, rows, &bad);
  if (!out.uniform) out.failing_divisor = bad;
  if (is_prime(static_cast<std::uint64_t>(n))) {
    out.verdict = FullSparkVerdict::kFullSpark;
    out.method = "chebotarev";
    return out;
  }
  if (n == 1 || prime_power(static_cast<std::uint64_t>(n))) {
    out.verdict = out.uniform ? FullSparkVerdict::kFullSpark : FullSparkVerdict::kNotFullSpark;
    out.method = "uniform";
    return out;
  }
  if (!out.uniform) {
    out.verdict = FullSparkVerdict::kNotFullSpark;
    out.method = "uniform";
    return out;
  }
  if (!brute_fallback || n > kBruteDftMaxN) {
    out.verdict = FullSparkVerdict::kNecessaryConditionOnly;
    out.method = "none";
    return out;
  }
  out.method = "brute";
  // A row set is full spark exactly when its complement is; scan the
  // smaller minors, then look for a witness on the row set itself.
  const auto size = static_cast<Index>(rows.size());
  const bool use_complement = size > n - size && size < n;
  std::optional<IndexList> hit;
  if (use_complement) {
    const IndexList comp = complement_rows(rows, n);
    const bool singular = dft_singular_columns(n, comp).has_value();
    if (singular) hit = dft_singular_columns(n, rows);
  } else {
    hit = dft_singular_columns(n, rows);
  }
  out.verdict = hit ? FullSparkVerdict::kNotFullSpark : FullSparkVerdict::kFullSpark;
  out.witness = std::move(hit);
  return out;
}

IndexList translate_rows(const IndexList& rows, Index shift, Index n) {
  IndexList out;
  for (Index r : rows) out.push_back((((r + shift) % n) + n) % n);
  std::sort(out.begin(), out.end());
  return out;
}

IndexList scale_rows(const IndexList& rows, Index unit, Index n) {
  require(std::gcd(unit, n) == 1, ErrorCode::kInvalidArgument,
          std::to_string(unit) + " is not a unit mod " + std::to_string(n));
  IndexList out;
  for (Index r : rows) out.push_back((((r * unit) % n) + n) % n);
  std::sort(out.begin(), out.end());
  return out;
}

IndexList complement_rows(const IndexList& rows, Index n) {
  IndexList sorted = rows;
  std::sort(sorted.begin(), sorted.end());
  return complement(sorted, n);
}

std::string describe(const DftSparkResult& r) {
  const bool not_full = r.verdict == FullSparkVerdict::kNotFullSpark;
  if (r.method == "chebotarev") return "prime size: full spark";
  if (r.method == "uniform") {
    if (!not_full) return "uniformly distributed over every divisor: full spark";
    return "not uniformly distributed over divisor " + std::to_string(r.failing_divisor.value_or(0)) +
           ": NOT full spark";
  }
  if (r.method == "none") return "necessary condition passes; brute force unavailable at this size";
  std::string out = "necessary condition passes; brute force: ";
  out += not_full ? "NOT full spark" : "full spark";
  if (r.witness) out += "; witness columns " + join(*r.witness);
  return out;
}

}  // namespace frameforge
