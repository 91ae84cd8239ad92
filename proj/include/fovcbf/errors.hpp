#pragma once

#include <stdexcept>
#include <string>

namespace fovcbf {

/// Raised when the relative state leaves the domain the kinematics are
/// defined on (distance at or below the floor, non-finite values).
class DegenerateStateError : public std::runtime_error {
 public:
  explicit DegenerateStateError(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid configuration or file contents. CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Calibration cannot produce a usable table (e.g. an empty risk group).
/// CLI maps this to exit code 3.
class CalibrationError : public std::runtime_error {
 public:
  CalibrationError(const std::string& what, int group) : std::runtime_error(what), group_(group) {}
  int group() const { return group_; }

 private:
  int group_;
};

/// Quantile table and evaluation config come from different pipelines.
/// CLI maps this to exit code 4.
class HashMismatchError : public std::runtime_error {
 public:
  explicit HashMismatchError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fovcbf
