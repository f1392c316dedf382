// Copyright 2026 The frameforge Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frameforge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (without the program name). Tables go to `out`,
// diagnostics to `err`; JSON records go to the --out file when given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frameforge::cli
