#pragma once

#include <stdexcept>
#include <string>

namespace rotapcr {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid configuration value or malformed config input.
class ConfigError : public Error {
public:
  using Error::Error;
};

/// Argument outside an operation's stated domain.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Integration step larger than the stability bound of the stiffest node.
class StepSizeError : public Error {
public:
  using Error::Error;
};

/// Steady-state system has no unique solution (internal node with no path
/// to a boundary node).
class SingularSystemError : public Error {
public:
  using Error::Error;
};

/// Calibration triple cannot produce a positive loss conductance.
class CalibrationError : public Error {
public:
  using Error::Error;
};

/// Autotune could not extract a usable plant model.
class TuningError : public Error {
public:
  using Error::Error;
};

/// Non-finite sensor reading fed to a control loop.
class SignalError : public Error {
public:
  using Error::Error;
};

/// Temperature series does not cover the protocol window.
class CoverageError : public Error {
public:
  using Error::Error;
};

/// Impossible solid or cavity geometry.
class GeometryError : public Error {
public:
  using Error::Error;
};

/// Sloped sidewalls meet before the requested etch depth (V-groove).
class SelfTerminatedEtchError : public GeometryError {
public:
  using GeometryError::GeometryError;
};

/// Optimization finished with an empty feasible set.
class InfeasibleError : public Error {
public:
  using Error::Error;
};

}  // namespace rotapcr
