#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace symdisc {

enum class ErrorKind {
  SolverFailure,
  SingularEntry,
  RepeatedCoordinate,
  NotInDomain,
  MuOneZero,
  NoSolution,
  NoRootInUnitDisc,
  InvalidScaling,
  WitnessNotFound,
  ContourTooClose,
  NonIntegerWinding,
  RoucheBoundViolated,
  DegenerateLift,
  CertificationFailed,
  DivisionByZero,
  DegreeBound,
  DimensionMismatch,
  Parse,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace symdisc
