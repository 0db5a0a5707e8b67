#pragma once

#include <stdexcept>
#include <string>

namespace seifert {

enum class ErrorKind {
  DimensionMismatch,
  NotSymmetric,
  OddDimension,
  DegenerateMod2,
  NonUnimodularIntersectionForm,
  OddRank,
  WrongParity,
  ParityMismatch,
  IndexOutOfRange,
  DiagonalMoveOddK,
  PreconditionFailed,
  ArfNonzero,
  ObstructionNonzero,
  SearchExhausted,
  MissingMatrix,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace seifert
