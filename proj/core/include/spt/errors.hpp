#pragma once

#include <stdexcept>
#include <string>

namespace spt {

// Quadrature or series evaluation failed to reach the requested tolerance
// within its subdivision/term budget.
class NonConvergenceError : public std::runtime_error {
 public:
  explicit NonConvergenceError(const std::string& what)
      : std::runtime_error(what) {}
};

// An ODE state component exceeded the configured magnitude bound.
class StateBlowupError : public std::runtime_error {
 public:
  explicit StateBlowupError(const std::string& what)
      : std::runtime_error(what) {}
};

// A value left the representable range (or a stability bound that guards it).
class NumericOverflowError : public std::runtime_error {
 public:
  explicit NumericOverflowError(const std::string& what)
      : std::runtime_error(what) {}
};

// Resolvent/propagator evaluated on top of a pole.
class PoleHitError : public std::runtime_error {
 public:
  explicit PoleHitError(const std::string& what) : std::runtime_error(what) {}
};

// An integration ray passes too close to a catalogued pole.
class PoleProximityError : public std::runtime_error {
 public:
  explicit PoleProximityError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace spt
