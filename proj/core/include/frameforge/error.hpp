// Copyright 2026 The frameforge Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace frameforge {

enum class ErrorCode {
  kInvalidArgument,
  kNotHermitian,
  kFailedToConverge,
  kRankDeficient,
  kUnsupportedSize,
  kInadmissibleParameters,
  kHadamardUnavailable,
  kBadPrime,
  kNotPrime,
  kEmptyRowSet,
  kZeroIndexIncluded,
  kBudgetExceeded,
  kRankDeficientSelection,
  kDisconnected,
  kInconsistentCycle,
  kParse,
  kIo,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

inline void require(bool condition, ErrorCode code, const std::string& what) {
  if (!condition) fail(code, what);
}

}  // namespace frameforge
