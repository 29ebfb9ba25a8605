#pragma once

#include <stdexcept>
#include <string>

namespace flexarm {

// Bad configuration file, bad checkpoint, bad command line.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// API misuse: calling an operation whose preconditions do not hold.
struct UsageError : std::logic_error {
  explicit UsageError(const std::string& what) : std::logic_error(what) {}
};

// Numerical fault inside a simulation or training run (non-finite state,
// diverged optimizer). Carries enough context to locate the failing run.
struct SimulationFault : std::runtime_error {
  explicit SimulationFault(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace flexarm
