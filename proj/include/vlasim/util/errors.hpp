#pragma once

#include <stdexcept>
#include <string>

namespace vlasim {

// Bad user input: config files, presets, CLI arguments. CLI maps this to exit 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Errors raised while a simulation is executing. CLI maps this to exit 3.
class SimError : public std::runtime_error {
 public:
  explicit SimError(const std::string& msg) : std::runtime_error(msg) {}
};

class DeadlockError : public SimError {
 public:
  explicit DeadlockError(const std::string& msg) : SimError(msg) {}
};

class HungWorkerError : public SimError {
 public:
  explicit HungWorkerError(const std::string& msg) : SimError(msg) {}
};

class CalibrationError : public std::runtime_error {
 public:
  explicit CalibrationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Violated internal invariant (e.g. staleness precondition). Always a bug.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace vlasim
