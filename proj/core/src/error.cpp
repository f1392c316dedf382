// Copyright 2026 The frameforge Authors.
// SPDX-License-Identifier: Apache-2.0

#include "frameforge/error.hpp"

namespace frameforge {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNotHermitian: return "NotHermitian";
    case ErrorCode::kFailedToConverge: return "FailedToConverge";
    case ErrorCode::kRankDeficient: return "RankDeficient";
    case ErrorCode::kUnsupportedSize: return "UnsupportedSize";
    case ErrorCode::kInadmissibleParameters: return "InadmissibleParameters";
    case ErrorCode::kHadamardUnavailable: return "HadamardUnavailable";
    case ErrorCode::kBadPrime: return "BadPrime";
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kEmptyRowSet: return "EmptyRowSet";
    case ErrorCode::kZeroIndexIncluded: return "ZeroIndexIncluded";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kRankDeficientSelection: return "RankDeficientSelection";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kInconsistentCycle: return "InconsistentCycle";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace frameforge
