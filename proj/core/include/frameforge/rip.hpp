// Copyright 2026 The frameforge Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "frameforge/frame.hpp"
#include "frameforge/rng.hpp"

namespace frameforge {

// Subsets (or subset pairs) an exact enumeration may visit before it gives
// up with BudgetExceeded instead of sampling.
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

enum class RipMethod { kExact, kGershgorin, kPower, kFlatRo, kRoBridge };
std::string_view to_string(RipMethod method) noexcept;

struct RipReport {
  Index k = 0;
  RipMethod method = RipMethod::kExact;
  int q = 0;  // power index, kPower only
  double delta = 0.0;
  std::optional<IndexList> witness;  // maximizing column subset
  double runtime_ms = 0.0;
};

// max over |S| = k of ||Phi_S* Phi_S - I||_2, by enumeration in
// lexicographic order; ties keep the first subset.
RipReport exact_delta(const Frame& frame, Index k, std::uint64_t budget = kDefaultBudget);
// (k - 1) mu. Requires unit-norm columns.
RipReport gershgorin_delta(const Frame& frame, Index k);
// max over |S| = k of Tr[(Phi_S* Phi_S - I)^{2q}]^{1/(2q)}; nonincreasing
// in q with limit exact_delta.
RipReport power_delta(const Frame& frame, Index k, int q, std::uint64_t budget = kDefaultBudget);

// max |1 - ||phi_n||^2|.
double delta_one(const Frame& frame);

struct RoResult {
  double theta = 0.0;
  IndexList left;
  IndexList right;
};
// Restricted orthogonality constant: max over disjoint supports I, J with
// |I|, |J| <= k of the top singular value of Phi_I* Phi_J. Interlacing
// makes the largest admissible sizes sufficient.
RoResult restricted_orthogonality(const Frame& frame, Index k,
                                  std::uint64_t budget = kDefaultBudget);

inline constexpr double kFlatRoConstant = 75.0;
inline constexpr double kFlatRoProofConstant = 74.17;

struct FlatRoResult {
  double theta_hat = 0.0;    // max |<sum_I phi, sum_J phi>| / sqrt(|I||J|)
  double ro_upper = 0.0;     // 75 theta_hat ln k, or theta_hat at k = 1
  double ro_upper_proof = 0.0;  // same with 74.17
};
// Enumerates every pair of disjoint nonempty supports of size <= k.
FlatRoResult flat_ro(const Frame& frame, Index k, std::uint64_t budget = kDefaultBudget);

// delta_{2K} <= 2 theta_K + delta_1.
double ro_to_rip(double theta_k, double delta_1);
// The older iterated bound (1 + ceil(log2 K)) theta_K + delta_1.
double iterated_ro_bound(double theta_k, double delta_1, Index k);

struct WeakRipProbe {
  std::vector<double> distortions;  // sorted ascending
  double median = 0.0;
  double q90 = 0.0;
  double q99 = 0.0;
  double max = 0.0;
  bool regime = false;  // hypotheses of the weak-RIP guarantee hold
};
// Places the given nonzero values on uniformly random positions (a random
// permutation of a K-sparse vector) and records the distortion
// | ||Phi x||^2 - ||x||^2 | / ||x||^2.
// Trial t draws from Rng(derive(seed, t)), so results do not depend on the
// thread count.
WeakRipProbe weak_rip_probe(const Frame& frame, std::span<const Complex> values, Index trials,
                            std::uint64_t seed, double delta);

struct CliqueAudit {
  long long p = 0;
  Index omega = 0;
  IndexList clique;
  double sqrt_p = 0.0;
  bool below_sqrt_p = false;
  // omega / sqrt(p), the restricted isometry constant at K = omega + 1.
  double delta_at_clique = 0.0;
};
// Clique number of the Paley graph on Z_p by branch and bound.
// Requires p prime, p = 1 mod 4, p <= 101.
CliqueAudit paley_clique_audit(long long p);

}  // namespace frameforge
