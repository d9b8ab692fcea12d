#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace dieselop {

/// Base error. Carries a machine-parsable code slug and the process exit
/// code the CLI maps this error family to.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message, int exit_code)
      : std::runtime_error(message), code_(std::move(code)), exit_code_(exit_code) {}

  const std::string& code() const noexcept { return code_; }
  int exit_code() const noexcept { return exit_code_; }

 private:
  std::string code_;
  int exit_code_;
};

/// Bad usage, bad config file, unknown keys/flags. Exit code 1.
class ConfigError : public Error {
 public:
  ConfigError(std::string code, const std::string& message)
      : Error(std::move(code), message, 1) {}
};

/// Missing or malformed data artifacts (trajectories, datasets, checkpoints). Exit code 2.
class DataError : public Error {
 public:
  DataError(std::string code, const std::string& message)
      : Error(std::move(code), message, 2) {}
};

/// Numeric failure: non-finite values, non-convergence, violated state invariants. Exit code 3.
class NumericError : public Error {
 public:
  NumericError(std::string code, const std::string& message)
      : Error(std::move(code), message, 3) {}
};

/// Filesystem failure. Exit code 4.
class IoError : public Error {
 public:
  IoError(std::string code, const std::string& message)
      : Error(std::move(code), message, 4) {}
};

}  // namespace dieselop
