// Copyright 2026 The frameforge Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <numeric>

#include "frameforge/coherence.hpp"
#include "frameforge/constructions.hpp"
#include "frameforge/error.hpp"
#include "frameforge/finite_field.hpp"
#include "frameforge/numerics.hpp"
#include "frameforge/parallel.hpp"
#include "frameforge/rip.hpp"
#include "frameforge/spark.hpp"
#include "frameforge/subsets.hpp"
#include "oracles.hpp"

namespace frameforge {
namespace {

Frame steiner_frame() {
  return build_steiner_etf(steiner_system({SteinerFamily::kTwoBlocks, 4, 0, 0}),
                           HadamardKind::kRealSylvester, {1, 2, 3});
}

std::vector<Frame> small_frames() {
  Rng rng(101);
  return {steiner_frame(),
          build_paley_etf(5),
          build_paley_etf(13),
          build_normalized_gaussian(4, 10, rng),
          build_random_sign(5, 10, rng),
          build_harmonic(9, {1, 2, 4}, true)};
}

// Delta over one support via the eigenvalues of the Gram block.
double support_delta(const Matrix& a, const IndexList& s) {
  const Matrix g = oracle::gram(select_columns(a, s));
  const auto ev = hermitian_eigenvalues(g);
  return std::max(std::abs(ev.front() - 1.0), std::abs(ev.back() - 1.0));
}

TEST(ExactDelta, PairsGiveCoherence) {
  for (const Frame& f : small_frames()) {
    EXPECT_NEAR(exact_delta(f, 2).delta, oracle::mu(f.matrix()), 1e-12) << f.tags().family;
    EXPECT_NEAR(exact_delta(f, 1).delta, 0.0, 1e-12);
  }
}

TEST(ExactDelta, SteinerBlockIsDependent) {
  const RipReport r = exact_delta(steiner_frame(), 4);
  EXPECT_NEAR(r.delta, 1.0, 1e-12);
  ASSERT_TRUE(r.witness.has_value());
  ASSERT_EQ(r.witness->size(), 4u);
  for (Index c : *r.witness) EXPECT_EQ(c / 4, r.witness->front() / 4);
}

TEST(ExactDelta, MatchesEnumerationOracle) {
  const Frame f = build_paley_etf(13);
  const Matrix& a = f.matrix();
  for (Index k = 2; k <= 4; ++k) {
    double best = 0.0;
    IndexList s = first_combination(k);
    do {
      best = std::max(best, support_delta(a, s));
    } while (next_combination(s, a.cols()));
    EXPECT_NEAR(exact_delta(f, k).delta, best, 1e-12) << k;
  }
}

TEST(ExactDelta, BudgetIsEnforced) {
  try {
    (void)exact_delta(build_code_frame(4, 1), 4, 1000);
    FAIL() << "expected BudgetExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
}

TEST(Gershgorin, CliqueEqualityOnSteiner) {
  const Frame f = steiner_frame();
  EXPECT_NEAR(gershgorin_delta(f, 4).delta, 1.0, 1e-12);
  EXPECT_NEAR(gershgorin_delta(f, 4).delta, exact_delta(f, 4).delta, 1e-12);
  EXPECT_EQ(gershgorin_delta(f, 1).delta, 0.0);
}

TEST(PowerDelta, EtfFirstPowerClosedForm) {
  const Frame f = steiner_frame();
  for (Index k = 2; k <= 4; ++k) {
    const double kk = static_cast<double>(k);
    EXPECT_NEAR(power_delta(f, k, 1).delta, std::sqrt(kk * (kk - 1.0)) / 3.0, 1e-12) << k;
  }
  EXPECT_NEAR(power_delta(f, 4, 1).delta, std::sqrt(12.0) / 3.0, 1e-12);
  EXPECT_NEAR(power_delta(f, 4, 8).delta, 1.0, 0.1);
  EXPECT_NEAR(power_delta(f, 1, 3).delta, 0.0, 1e-15);
}

TEST(PowerDelta, OrderingChain) {
  for (const Frame& f : small_frames()) {
    for (Index k = 2; k <= 3; ++k) {
      const double exact = exact_delta(f, k).delta;
      double previous = power_delta(f, k, 1).delta;
      for (int q = 2; q <= 5; ++q) {
        const double next = power_delta(f, k, q).delta;
        EXPECT_LE(next, previous + 1e-9);
        EXPECT_LE(exact, next + 1e-9);
        previous = next;
      }
      EXPECT_LE(exact, gershgorin_delta(f, k).delta + 1e-9);
    }
  }
}

TEST(RestrictedOrthogonality, BasisAndSingletons) {
  EXPECT_NEAR(restricted_orthogonality(build_identity(5), 2).theta, 0.0, 1e-15);
  for (const Frame& f : small_frames()) {
    EXPECT_NEAR(restricted_orthogonality(f, 1).theta, oracle::mu(f.matrix()), 1e-12);
  }
}

TEST(RestrictedOrthogonality, BridgeToRip) {
  EXPECT_EQ(ro_to_rip(0.0, 0.0), 0.0);
  for (const Frame& f : small_frames()) {
    if (f.cols() > 10) continue;
    for (Index k = 1; k <= 2; ++k) {
      const double theta = restricted_orthogonality(f, k).theta;
      const double delta2k = exact_delta(f, 2 * k).delta;
      EXPECT_LE(theta, delta2k + 1e-9);
      EXPECT_LE(delta2k, 2.0 * theta + delta_one(f) + 1e-9);
      EXPECT_LE(delta2k, ro_to_rip(theta, delta_one(f)) + 1e-9);
    }
  }
}

TEST(FlatRo, BasisAndBounds) {
  const FlatRoResult basis = flat_ro(build_identity(6), 3);
  EXPECT_EQ(basis.theta_hat, 0.0);
  const Frame f = build_paley_etf(13);
  const FlatRoResult r = flat_ro(f, 3);
  EXPECT_NEAR(r.ro_upper, 75.0 * r.theta_hat * std::log(3.0), 1e-12);
  EXPECT_LE(r.ro_upper_proof, r.ro_upper);
  EXPECT_LE(restricted_orthogonality(f, 3).theta, r.ro_upper + 1e-12);
}

TEST(WeakRip, BasisHasNoDistortion) {
  const std::vector<Complex> values(3, 1.0);
  const WeakRipProbe p = weak_rip_probe(build_identity(8), values, 50, 1, 0.5);
  EXPECT_EQ(p.max, 0.0);
}

TEST(WeakRip, CodeFramePairsStayBelowTwiceCoherence) {
  const std::vector<Complex> values = {1.0, -1.0};
  const WeakRipProbe p = weak_rip_probe(build_code_frame(4, 1), values, 1000, 5, 0.5);
  EXPECT_LT(p.max, 1.0);
  EXPECT_LE(p.median, p.q90);
  EXPECT_LE(p.q90, p.q99);
  EXPECT_LE(p.q99, p.max);
}

TEST(WeakRip, ThreadCountDoesNotChangeResults) {
  const std::vector<Complex> values = {1.0, 2.0, Complex(0, 1)};
  const Frame f = build_paley_etf(13);
  set_thread_count(1);
  const auto a = weak_rip_probe(f, values, 200, 3, 0.5).distortions;
  set_thread_count(3);
  const auto b = weak_rip_probe(f, values, 200, 3, 0.5).distortions;
  set_thread_count(0);
  EXPECT_EQ(a, b);
}

TEST(PaleyClique, SmallPrimes) {
  const std::vector<std::pair<long long, Index>> cases = {{5, 2}, {13, 3}, {17, 3}};
  for (const auto& [p, omega] : cases) {
    const CliqueAudit a = paley_clique_audit(p);
    EXPECT_EQ(a.omega, omega) << p;
    EXPECT_TRUE(a.below_sqrt_p);
    EXPECT_NEAR(a.sqrt_p, std::sqrt(static_cast<double>(p)), 1e-15);
    ASSERT_EQ(static_cast<Index>(a.clique.size()), omega);
    for (std::size_t i = 0; i < a.clique.size(); ++i) {
      for (std::size_t j = i + 1; j < a.clique.size(); ++j) {
        EXPECT_EQ(legendre(a.clique[j] - a.clique[i], p), 1);
      }
    }
  }
}

TEST(Spark, SteinerFrameHasBlockWitness) {
  const SparkReport r = spark(steiner_frame());
  EXPECT_EQ(r.spark, 4);
  EXPECT_FALSE(r.full_spark);
  ASSERT_TRUE(r.witness.has_value());
  for (Index c : *r.witness) EXPECT_EQ(c / 4, r.witness->front() / 4);
  EXPECT_LE(smallest_singular_value(select_columns(steiner_frame().matrix(), *r.witness)), 1e-9);
}

TEST(Spark, IdentityPlusDftMeetsUncertaintyBound) {
  for (Index m : {4, 9}) {
    const Frame f = build_identity_plus_dft(m);
    const SparkReport r = spark(f);
    const auto root = static_cast<Index>(std::lround(std::sqrt(static_cast<double>(m))));
    EXPECT_EQ(r.spark, 2 * root) << m;
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_LE(smallest_singular_value(select_columns(f.matrix(), *r.witness)), 1e-9);
  }
  // Dirac comb of period 4 and its transform in 16 dimensions.
  const Frame big = build_identity_plus_dft(16);
  const IndexList comb = {0, 4, 8, 12, 16, 20, 24, 28};
  EXPECT_LE(smallest_singular_value(select_columns(big.matrix(), comb)), 1e-9);
}

TEST(Spark, PaleyFiveIsFullSpark) {
  const SparkReport r = spark(build_paley_etf(5));
  EXPECT_EQ(r.spark, 4);
  EXPECT_TRUE(r.full_spark);
  // Any M + 1 columns are dependent.
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->size(), 4u);
}

TEST(Spark, SmallSparkForcesUnitDelta) {
  for (const Frame& f : small_frames()) {
    const SparkReport r = spark(f);
    if (r.full_spark || r.spark > 4) continue;
    EXPECT_GE(exact_delta(f, r.spark).delta, 1.0 - 1e-9) << f.tags().family;
  }
}

TEST(Spark, VandermondeRule) {
  const auto bases = unit_circle_bases(7);
  const SparkReport r = vandermonde_spark(bases, 3);
  EXPECT_TRUE(r.full_spark);
  EXPECT_EQ(r.method, SparkMethod::kVandermondeRule);
  std::vector<Complex> repeated = bases;
  repeated[4] = repeated[2];
  EXPECT_EQ(vandermonde_spark(repeated, 3).spark, 2);
}

TEST(DftSpark, AllOnesCounterexample) {
  const DftSparkResult r = dft_full_spark_test(4, {0, 2});
  EXPECT_EQ(r.verdict, FullSparkVerdict::kNotFullSpark);
  EXPECT_FALSE(r.uniform);
  ASSERT_TRUE(r.failing_divisor.has_value());
  EXPECT_EQ(*r.failing_divisor, 2);
}

TEST(DftSpark, UniformYetSingular) {
  Index divisor = -1;
  EXPECT_TRUE(uniformly_distributed(10, {0, 1, 3, 4}, &divisor));
  const DftSparkResult r = dft_full_spark_test(10, {0, 1, 3, 4});
  EXPECT_EQ(r.verdict, FullSparkVerdict::kNotFullSpark);
  EXPECT_EQ(r.method, "brute");
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(*r.witness, IndexList({0, 1, 2, 6}));
  const Frame f = build_harmonic(10, {0, 1, 3, 4}, false);
  EXPECT_LE(std::abs(oracle::det(select_columns(f.matrix(), {0, 1, 2, 6}))), 1e-9);
  const DftSparkResult unchecked = dft_full_spark_test(10, {0, 1, 3, 4}, false);
  EXPECT_EQ(unchecked.verdict, FullSparkVerdict::kNecessaryConditionOnly);
}

TEST(DftSpark, PrimeSizesAreAlwaysFullSpark) {
  for (Index n : {5, 7}) {
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
      IndexList rows;
      for (Index i = 0; i < n; ++i) {
        if ((mask >> i) & 1u) rows.push_back(i);
      }
      EXPECT_EQ(dft_full_spark_test(n, rows).verdict, FullSparkVerdict::kFullSpark);
      EXPECT_FALSE(dft_singular_columns(n, rows).has_value()) << n << " mask " << mask;
    }
  }
  Rng rng(13);
  for (Index n : {11, 13}) {
    for (int t = 0; t < 20; ++t) {
      const IndexList rows = rng.subset(n, 1 + static_cast<Index>(rng.below(static_cast<std::uint64_t>(n - 1))));
      EXPECT_EQ(dft_full_spark_test(n, rows).method, "chebotarev");
      EXPECT_FALSE(dft_singular_columns(n, rows).has_value());
    }
  }
}

TEST(DftSpark, ClosureOperations) {
  EXPECT_EQ(translate_rows({0, 1, 3}, 2, 5), IndexList({0, 2, 3}));
  EXPECT_EQ(scale_rows({1, 2}, 3, 7), IndexList({3, 6}));
  EXPECT_EQ(complement_rows({0, 2}, 5), IndexList({1, 3, 4}));
  EXPECT_THROW((void)scale_rows({1, 2}, 2, 8), Error);
}

TEST(DftSpark, VerdictInvariantUnderClosure) {
  for (Index n : {6, 8, 9, 10, 12, 14, 15, 16}) {
    Rng rng(static_cast<std::uint64_t>(n));
    for (int t = 0; t < 6; ++t) {
      const auto size = 2 + static_cast<Index>(rng.below(static_cast<std::uint64_t>(n - 3)));
      const IndexList rows = rng.subset(n, size);
      const bool base = !dft_singular_columns(n, rows).has_value();
      const Index shift = static_cast<Index>(rng.below(static_cast<std::uint64_t>(n)));
      EXPECT_EQ(!dft_singular_columns(n, translate_rows(rows, shift, n)).has_value(), base);
      for (Index u = 1; u < n; ++u) {
        if (std::gcd(u, n) != 1) continue;
        EXPECT_EQ(!dft_singular_columns(n, scale_rows(rows, u, n)).has_value(), base);
        break;
      }
      EXPECT_EQ(!dft_singular_columns(n, complement_rows(rows, n)).has_value(), base)
          << n << " rows of size " << size;
    }
  }
}

}  // namespace
}  // namespace frameforge
