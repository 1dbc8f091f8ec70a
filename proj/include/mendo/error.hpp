#pragma once

#include <stdexcept>
#include <string>

namespace mendo {

enum class ErrorKind {
  InvalidArgument,
  DimensionMismatch,
  CharacteristicMismatch,
  RootObstruction,
  NotInDivisibleHull,
  NotIndependent,
  MalformedSystem,
  ResourceLimit,
  OutsideDomain,
  SystemViolated,
  IntersectionTooLarge,
  DisagreeOnBase,
  Syntax,
  UnassignedVariable,
  LimitExceeded,
  NotPrime,
  LevelMissing,
  ZeroPolynomial,
  CriterionFails,
  Internal,
};

const char* to_string(ErrorKind kind);

/* Every failure the library reports carries a kind so that callers (the CLI
 * in particular) can map it without parsing messages. */
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/* Raised by the term parser; offset is 0-based into the source text. */
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : Error(ErrorKind::Syntax, "at offset " + std::to_string(offset) + ": " + what),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace mendo
