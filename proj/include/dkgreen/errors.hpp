// SPDX-License-Identifier: Apache-2.0
//
// Error taxonomy shared by all dkgreen modules.  Every failure mode that a
// caller can trigger through arguments maps to one of these types; internal
// invariant violations use std::logic_error instead.

#ifndef DKGREEN_ERRORS_HPP_
#define DKGREEN_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace dkgreen {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Argument sits on (or within the guard band of) a Gamma-function pole.
// In the Green's-function modules this signals a bound-state energy.
class PoleError : public Error {
 public:
  using Error::Error;
};

// A special-function parameter is outside the supported set (for example a
// Kummer b that is a non-positive integer).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// An internal series/asymptotic/quadrature evaluation could not meet its own
// error estimate.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

// Point lies outside the domain of a map or a solution table.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A coordinate map stopped being a diffeomorphism (h'(q) ~ 0).
class DegenerateMap : public Error {
 public:
  using Error::Error;
};

// |E| >= m c^2: outside the bound regime.
class ThresholdError : public Error {
 public:
  using Error::Error;
};

// coupling >= l + D/2 - 1: the effective centrifugal index turns imaginary.
class FallToCenter : public Error {
 public:
  using Error::Error;
};

// Radial arguments violate the canonical ordering r_b >= r_a.
class OrderError : public Error {
 public:
  using Error::Error;
};

// Adaptive step control collapsed.
class StiffnessError : public Error {
 public:
  using Error::Error;
};

// The decaying tail left the representable range before reaching the target.
class UnderflowError : public Error {
 public:
  using Error::Error;
};

// Two-solution Wronskian too small to build a Green's function from.
class NearPole : public Error {
 public:
  using Error::Error;
};

// Bad CLI flags / run configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace dkgreen

#endif  // DKGREEN_ERRORS_HPP_
