#pragma once

#include <stdexcept>
#include <string>

namespace cpfabc {

/// Invalid configuration: bad file, unknown key, out-of-range value.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid argument to a library operation (violated precondition).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// I/O failure or malformed on-disk artifact.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// A model fit diverged or produced unusable values. Callers that aggregate
/// many fits catch this and record a failure flag instead of aborting.
class TrainingFailure : public std::runtime_error {
 public:
  explicit TrainingFailure(const std::string& what) : std::runtime_error(what) {}
};

/// The quadrature likelihood oracle failed to converge.
class OracleFailure : public std::runtime_error {
 public:
  explicit OracleFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cpfabc
