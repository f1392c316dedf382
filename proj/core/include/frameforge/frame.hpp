// Copyright 2026 The frameforge Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "frameforge/types.hpp"

namespace frameforge {

inline constexpr double kUnitNormTolerance = 1e-9;
inline constexpr double kTightTolerance = 1e-8;

struct FrameTags {
  std::string family = "custom";
  std::string params = "";  // single token, e.g. "v=4,k=2"
  std::optional<std::uint64_t> seed;
  bool unit_norm = false;
  bool tight = false;
  bool equiangular = false;
  bool real = false;
};

// An M x N matrix read column by column as frame elements. Construction
// enforces M <= N, nonzero columns, and that every flag set in the tags
// actually holds.
class Frame {
 public:
  Frame(Matrix matrix, FrameTags tags);

  // Tags computed from the matrix: unit_norm, tight and real are measured,
  // equiangular is left unset.
  static Frame from_matrix(Matrix matrix, std::string family = "custom",
                           std::string params = "");

  const Matrix& matrix() const noexcept { return matrix_; }
  const FrameTags& tags() const noexcept { return tags_; }
  Index rows() const noexcept { return matrix_.rows(); }
  Index cols() const noexcept { return matrix_.cols(); }
  auto column(Index n) const { return matrix_.col(n); }

 private:
  Matrix matrix_;
  FrameTags tags_;
};

bool columns_unit_norm(const Matrix& m, double tol = kUnitNormTolerance);
// Max entrywise |Phi Phi* - (N/M) I|.
double tightness_defect(const Matrix& m);
bool is_real(const Matrix& m);

// Shortest decimal text that reads back to the same double.
std::string format_real(double x);

// Text format: a header "M N family params seed" with "-" for an empty
// field, then M*N lines "re im" in column-major order. Doubles are written
// with 17 significant digits so reading back is bit-exact.
void write_frame(std::ostream& out, const Frame& frame);
Frame read_frame(std::istream& in);
void save_frame(const std::filesystem::path& path, const Frame& frame);
Frame load_frame(const std::filesystem::path& path);

}  // namespace frameforge
