#include "mendo/error.hpp"

namespace mendo {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::CharacteristicMismatch: return "CharacteristicMismatch";
    case ErrorKind::RootObstruction: return "RootObstruction";
    case ErrorKind::NotInDivisibleHull: return "NotInDivisibleHull";
    case ErrorKind::NotIndependent: return "NotIndependent";
    case ErrorKind::MalformedSystem: return "MalformedSystem";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::OutsideDomain: return "OutsideDomain";
    case ErrorKind::SystemViolated: return "SystemViolated";
    case ErrorKind::IntersectionTooLarge: return "IntersectionTooLarge";
    case ErrorKind::DisagreeOnBase: return "DisagreeOnBase";
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::UnassignedVariable: return "UnassignedVariable";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::LevelMissing: return "LevelMissing";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::CriterionFails: return "CriterionFails";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace mendo
