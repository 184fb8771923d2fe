#include "symdisc/error.hpp"

namespace symdisc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SolverFailure: return "SolverFailure";
    case ErrorKind::SingularEntry: return "SingularEntry";
    case ErrorKind::RepeatedCoordinate: return "RepeatedCoordinate";
    case ErrorKind::NotInDomain: return "NotInDomain";
    case ErrorKind::MuOneZero: return "MuOneZero";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::NoRootInUnitDisc: return "NoRootInUnitDisc";
    case ErrorKind::InvalidScaling: return "InvalidScaling";
    case ErrorKind::WitnessNotFound: return "WitnessNotFound";
    case ErrorKind::ContourTooClose: return "ContourTooClose";
    case ErrorKind::NonIntegerWinding: return "NonIntegerWinding";
    case ErrorKind::RoucheBoundViolated: return "RoucheBoundViolated";
    case ErrorKind::DegenerateLift: return "DegenerateLift";
    case ErrorKind::CertificationFailed: return "CertificationFailed";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DegreeBound: return "DegreeBound";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace symdisc
