// Copyright 2026 The frameforge Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "frameforge/coherence.hpp"
#include "frameforge/constructions.hpp"
#include "frameforge/error.hpp"
#include "frameforge/flip.hpp"
#include "frameforge/numerics.hpp"
#include "oracles.hpp"

namespace frameforge {
namespace {

Frame worked_example() {
  return Frame::from_matrix(oracle::sign_matrix(
      {"++++-++++-", "+-+++---+-", "++++++++-+", "---+-++---", "-++--+----"}, 1.0 / std::sqrt(5.0)));
}

TEST(FlipPattern, ParseAndFormat) {
  const FlipPattern p = FlipPattern::parse("+-+");
  EXPECT_EQ(p.size(), 3);
  EXPECT_EQ(p.str(), "+-+");
  EXPECT_TRUE(p.is_sign_pattern());
  EXPECT_THROW((void)FlipPattern::parse("+x"), Error);
  const FlipPattern phase({Complex(0, 1), 1.0});
  EXPECT_FALSE(phase.is_sign_pattern());
  EXPECT_THROW((void)phase.str(), Error);
  EXPECT_THROW(FlipPattern({2.0}), Error);
}

TEST(ApplyPattern, AllPlusIsIdentity) {
  const Frame f = worked_example();
  EXPECT_EQ(apply_pattern(f, FlipPattern::all_plus(10)).matrix(), f.matrix());
  EXPECT_THROW((void)apply_pattern(f, FlipPattern::all_plus(9)), Error);
}

TEST(ApplyPattern, WorkedExamplePattern) {
  const Frame flipped = apply_pattern(worked_example(), FlipPattern::parse("+-+--++-++"));
  EXPECT_NEAR(oracle::nu(flipped.matrix()), 0.1556, 5e-5);
}

TEST(ApplyPattern, PreservesCoherenceNormsAndSpectralNorm) {
  Rng rng(12);
  const Frame f = build_alltop_gabor(5);
  std::vector<Complex> signs;
  for (Index j = 0; j < f.cols(); ++j) signs.push_back(std::polar(1.0, 2.0 * kPi * rng.uniform()));
  const Frame g = apply_pattern(f, FlipPattern(signs));
  EXPECT_NEAR(worst_case_coherence(g), worst_case_coherence(f), 1e-12);
  EXPECT_NEAR(spectral_norm(g.matrix()), spectral_norm(f.matrix()), 1e-12);
  EXPECT_LE((g.matrix().colwise().norm() - f.matrix().colwise().norm()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_FALSE(g.tags().real);
}

TEST(LinearTimeFlip, WorkedExample) {
  const FlipResult r = linear_time_flip(worked_example());
  EXPECT_EQ(r.pattern.str(), "+-+--++-++");
  EXPECT_NEAR(average_coherence(r.frame), 0.1556, 5e-5);
  const double mu = worst_case_coherence(r.frame);
  EXPECT_LE(average_coherence(r.frame), mu / std::sqrt(5.0) + 1e-12);
}

TEST(LinearTimeFlip, ZeroSumFrameKeepsEverySign) {
  Matrix a(2, 4);
  a << 1, -1, 0, 0,
       0, 0, 1, -1;
  const FlipResult r = linear_time_flip(Frame::from_matrix(a));
  EXPECT_EQ(r.pattern.str(), "++++");
}

TEST(LinearTimeFlip, TheoremRegime) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const Frame f = build_random_sign(4, 31, rng);
    const FlipResult r = linear_time_flip(f);
    const CoherenceReport c = coherence_report(r.frame);
    EXPECT_LE(c.nu, c.mu / 2.0 + 1e-12) << "seed " << seed;
    EXPECT_TRUE(check_nu_sufficient_conditions(r.frame).cond_iii) << "seed " << seed;
  }
}

TEST(LinearTimeFlip, PartialSumsStayBelowCount) {
  Rng rng(77);
  std::vector<Frame> frames = {worked_example(), build_alltop_gabor(5), build_chirp(7),
                               build_normalized_gaussian(6, 40, rng)};
  for (const Frame& f : frames) {
    const FlipResult r = linear_time_flip(f);
    ASSERT_EQ(static_cast<Index>(r.partial_sums.size()), f.cols());
    for (std::size_t j = 0; j < r.partial_sums.size(); ++j) {
      EXPECT_LE(r.partial_sums[j], static_cast<double>(j + 1) + 1e-9);
    }
    const Vector total = r.frame.matrix().rowwise().sum();
    EXPECT_NEAR(total.squaredNorm(), r.partial_sums.back(), 1e-9);
  }
}

TEST(LinearTimeFlip, RejectsNonUnitColumns) {
  EXPECT_THROW((void)linear_time_flip(Frame::from_matrix(2.0 * Matrix::Identity(2, 2))), Error);
}

TEST(ExhaustiveFlip, SingleColumn) {
  const ExhaustiveFlipResult r = exhaustive_flip(build_identity(1));
  EXPECT_EQ(r.pattern.str(), "+");
  EXPECT_EQ(r.nu, 0.0);
}

TEST(ExhaustiveFlip, NeverWorseThanGreedy) {
  Rng rng(21);
  std::vector<Frame> frames = {worked_example(), build_random_sign(3, 12, rng),
                               build_normalized_gaussian(4, 14, rng), build_paley_etf(13)};
  for (const Frame& f : frames) {
    const ExhaustiveFlipResult best = exhaustive_flip(f);
    const double greedy = average_coherence(linear_time_flip(f).frame);
    EXPECT_LE(best.nu, greedy + 1e-12);
    EXPECT_EQ(best.pattern.signs().front(), Complex(1.0));
    EXPECT_NEAR(best.nu, oracle::nu(apply_pattern(f, best.pattern).matrix()), 1e-12);
  }
}

TEST(ExhaustiveFlip, MatchesBruteForceOracle) {
  const Frame f = worked_example();
  double best = 2.0;
  for (std::uint32_t word = 0; word < (1u << 9); ++word) {
    std::vector<Complex> signs(10, 1.0);
    for (int j = 1; j < 10; ++j) {
      if ((word >> (j - 1)) & 1u) signs[static_cast<std::size_t>(j)] = -1.0;
    }
    best = std::min(best, oracle::nu(apply_pattern(f, FlipPattern(signs)).matrix()));
  }
  EXPECT_NEAR(exhaustive_flip(f).nu, best, 1e-12);
  EXPECT_LE(best, 0.1556);
}

TEST(ExhaustiveFlip, SizeLimit) {
  Rng rng(1);
  try {
    (void)exhaustive_flip(build_random_sign(4, kExhaustiveFlipMaxN + 1, rng));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupportedSize);
  }
}

}  // namespace
}  // namespace frameforge
