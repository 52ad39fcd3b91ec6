// Copyright 2026 The statkit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace statkit {

// Error categories. Each maps 1:1 onto a C API status code and, for the
// CLI, onto a process exit code (Config -> 2, Data -> 3, Numeric -> 4).
enum class ErrorCode {
  InvalidArgument,
  Config,
  Data,
  Numeric,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace statkit
