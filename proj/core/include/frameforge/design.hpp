// Copyright 2026 The frameforge Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frameforge/types.hpp"

namespace frameforge {

enum class SteinerFamily { kTwoBlocks, kTriples, kAffine, kProjective };

std::string_view to_string(SteinerFamily family) noexcept;
std::optional<SteinerFamily> parse_steiner_family(std::string_view text) noexcept;

struct SteinerParams {
  SteinerFamily family = SteinerFamily::kTwoBlocks;
  int v = 0;  // point count, for 2-blocks and triples
  int q = 0;  // field order, for affine and projective geometries
  int n = 0;  // geometry dimension
};

// A 2-(v, k, lambda_) design stored as its transposed incidence matrix:
// b rows (blocks) by v columns (points).
struct DesignIncidence {
  int v = 0;
  int b = 0;
  int r = 0;
  int k = 0;
  int lambda_ = 0;
  Eigen::MatrixXi incidence;
};

// Blocks are listed in lexicographic order of their sorted point lists.
// Throws InadmissibleParameters naming the violated condition.
DesignIncidence steiner_system(const SteinerParams& params);

// Builds a design record from an explicit incidence matrix, reading v and b
// from its shape and k, r, lambda_ from its first row, first column and
// first column pair.
DesignIncidence design_from_incidence(const Eigen::MatrixXi& incidence);

struct DesignViolation {
  std::string check;   // "row_sum", "column_sum", "pair", "dimension"
  IndexList where;     // offending row, column, or column pair
  long long expected;
  long long actual;
};

// Empty when the incidence satisfies every design identity.
std::vector<DesignViolation> verify_design(const DesignIncidence& design);

void write_design(std::ostream& out, const DesignIncidence& design);
DesignIncidence read_design(std::istream& in);

struct Rational {
  long long num = 0;
  long long den = 1;

  bool is_integer() const noexcept { return den == 1; }
  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
  friend bool operator==(const Rational&, const Rational&) = default;
};
Rational make_rational(long long num, long long den);

enum class SteinerExistence {
  kNotApplicable,   // parameters inadmissible
  kUnlisted,        // admissible; not in any exception list
  kNonexistent,     // admissible, but the system is known not to exist
  kUnknown,         // admissible, existence open
};
std::string_view to_string(SteinerExistence existence) noexcept;

// Design parameters an M x N Steiner ETF would need.
struct SteinerParameterSolution {
  Rational r_squared;
  std::optional<Rational> r;  // empty when r_squared is not a rational square
  std::optional<Rational> v;
  std::optional<Rational> k;
  long long b = 0;
  bool admissible = false;  // v, r and k all integers
  SteinerExistence existence = SteinerExistence::kNotApplicable;
  std::string note;
};
SteinerParameterSolution steiner_parameter_solver(long long m, long long n);

}  // namespace frameforge
