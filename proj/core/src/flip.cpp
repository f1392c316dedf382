// Copyright 2026 The frameforge Authors.
// SPDX-License-Identifier: Apache-2.0

#include "frameforge/flip.hpp"

#include <bit>
#include <cmath>

#include "frameforge/coherence.hpp"
#include "frameforge/error.hpp"
#include "frameforge/numerics.hpp"
#include "frameforge/parallel.hpp"

namespace frameforge {
namespace {

constexpr double kFlipTieTolerance = 1e-12;

// Average coherence of Phi D for the Gray-coded sign word, from scratch.
double nu_of_word(const Matrix& g, std::uint64_t word) {
  const Index n = g.cols();
  auto sign = [&](Index j) { return (j > 0 && ((word >> (j - 1)) & 1u)) ? -1.0 : 1.0; };
  double nu = 0.0;
  for (Index i = 0; i < n; ++i) {
    Complex sum = 0.0;
    for (Index j = 0; j < n; ++j) {
      if (j != i) sum += sign(j) * g(j, i);
    }
    nu = std::max(nu, std::abs(sum));
  }
  return n > 1 ? nu / static_cast<double>(n - 1) : 0.0;
}

}  // namespace

FlipPattern::FlipPattern(std::vector<Complex> signs) : signs_(std::move(signs)) {
  for (const Complex& s : signs_) {
    require(std::abs(std::abs(s) - 1.0) <= 1e-12, ErrorCode::kInvalidArgument,
            "pattern entries must be unimodular");
  }
}

FlipPattern FlipPattern::all_plus(Index n) {
  return FlipPattern(std::vector<Complex>(static_cast<std::size_t>(n), 1.0));
}

FlipPattern FlipPattern::parse(std::string_view text) {
  std::vector<Complex> signs;
  for (char c : text) {
    require(c == '+' || c == '-', ErrorCode::kParse,
            "flip patterns use only '+' and '-', got '" + std::string(1, c) + "'");
    signs.emplace_back(c == '+' ? 1.0 : -1.0);
  }
  return FlipPattern(std::move(signs));
}

bool FlipPattern::is_sign_pattern() const noexcept {
  for (const Complex& s : signs_) {
    if (s != Complex(1.0) && s != Complex(-1.0)) return false;
  }
  return true;
}

std::string FlipPattern::str() const {
  require(is_sign_pattern(), ErrorCode::kInvalidArgument, "not a sign pattern");
  std::string out;
  for (const Complex& s : signs_) out += s.real() > 0 ? '+' : '-';
  return out;
}

Frame apply_pattern(const Frame& frame, const FlipPattern& pattern) {
  require(pattern.size() == frame.cols(), ErrorCode::kInvalidArgument,
          "pattern length " + std::to_string(pattern.size()) + " differs from N = " +
              std::to_string(frame.cols()));
  Matrix a = frame.matrix();
  for (Index j = 0; j < a.cols(); ++j) a.col(j) *= pattern.signs()[static_cast<std::size_t>(j)];
  FrameTags tags = frame.tags();
  tags.real = tags.real && pattern.is_sign_pattern();
  return Frame(std::move(a), std::move(tags));
}

FlipResult linear_time_flip(const Frame& frame) {
  const Matrix& a = frame.matrix();
  require(columns_unit_norm(a), ErrorCode::kInvalidArgument, "flipping needs unit-norm columns");
  std::vector<Complex> signs(static_cast<std::size_t>(a.cols()), 1.0);
  std::vector<double> partial;
  Vector sum = a.col(0);
  partial.push_back(sum.squaredNorm());
  for (Index n = 1; n < a.cols(); ++n) {
    // ||s + phi|| <= ||s - phi|| iff Re<s, phi> <= 0; ties within rounding keep phi.
    const double cross = a.col(n).dot(sum).real();
    if (cross <= kFlipTieTolerance * std::max(1.0, sum.norm())) {
      sum += a.col(n);
    } else {
      sum -= a.col(n);
      signs[static_cast<std::size_t>(n)] = -1.0;
    }
    partial.push_back(sum.squaredNorm());
  }
  FlipPattern pattern(std::move(signs));
  Frame flipped = apply_pattern(frame, pattern);
  return {std::move(flipped), std::move(pattern), std::move(partial)};
}

ExhaustiveFlipResult exhaustive_flip(const Frame& frame) {
  const Index n = frame.cols();
  require(n <= kExhaustiveFlipMaxN, ErrorCode::kUnsupportedSize,
          "exhaustive flipping is limited to N <= " + std::to_string(kExhaustiveFlipMaxN));
  const Matrix g = gram(normalized_columns(frame.matrix()));
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  struct Local {
    double nu = 2.0;
    std::uint64_t word = 0;
  };
  const std::size_t chunks = chunk_count(static_cast<std::size_t>(total));
  std::vector<Local> partial(chunks);
  for_each_chunk(static_cast<std::size_t>(total), [&](std::size_t c, std::size_t begin, std::size_t end) {
    if (begin == end) return;
    // Row sums r_i = sum_{j != i} s_j G_ji, updated in O(N) per Gray step.
    std::uint64_t word = begin ^ (begin >> 1);
    std::vector<double> sign(static_cast<std::size_t>(n), 1.0);
    for (Index j = 1; j < n; ++j) {
      if ((word >> (j - 1)) & 1u) sign[static_cast<std::size_t>(j)] = -1.0;
    }
    std::vector<Complex> rows(static_cast<std::size_t>(n), 0.0);
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        if (j != i) rows[static_cast<std::size_t>(i)] += sign[static_cast<std::size_t>(j)] * g(j, i);
      }
    }
    Local& best = partial[c];
    const double scale = n > 1 ? 1.0 / static_cast<double>(n - 1) : 0.0;
    for (std::uint64_t counter = begin;;) {
      double approx = 0.0;
      for (const Complex& r : rows) approx = std::max(approx, std::abs(r));
      approx *= scale;
      // Accumulated updates drift slightly; candidates are rescored from
      // scratch so the winner does not depend on where chunks begin.
      if (approx <= best.nu + 1e-9) {
        const double exact = nu_of_word(g, word);
        if (exact < best.nu) best = {exact, word};
      }
      if (++counter == end) break;
      const auto bit = static_cast<Index>(std::countr_zero(counter));
      const Index j = bit + 1;
      const double old = sign[static_cast<std::size_t>(j)];
      sign[static_cast<std::size_t>(j)] = -old;
      word ^= std::uint64_t{1} << bit;
      for (Index i = 0; i < n; ++i) {
        if (i != j) rows[static_cast<std::size_t>(i)] -= 2.0 * old * g(j, i);
      }
    }
  });
  Local out;
  for (const Local& p : partial) {
    if (p.nu < out.nu) out = p;
  }
  std::vector<Complex> signs(static_cast<std::size_t>(n), 1.0);
  for (Index j = 1; j < n; ++j) {
    if ((out.word >> (j - 1)) & 1u) signs[static_cast<std::size_t>(j)] = -1.0;
  }
  return {FlipPattern(std::move(signs)), out.nu};
}

}  // namespace frameforge
