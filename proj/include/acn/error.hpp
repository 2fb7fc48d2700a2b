/*
 * Copyright (c) 2026, ACN model contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <stdexcept>
#include <string>

namespace acn {

// Numeric values match the CLI exit-code taxonomy where one exists.
enum class ErrorCode {
  Parse = 1,
  Infeasible = 2,
  Dimension = 3,
  Calibration = 4,
  VerifyFailed = 5,
  Io = 6,
  Range = 7,
  Invalid = 8,
  Degenerate = 9,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &message) {
  throw Error(code, message);
}

} // namespace acn
