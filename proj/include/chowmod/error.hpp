#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chowmod {

enum class ErrorCode {
  InvalidArgument,
  NonPrimeCharacteristic,
  ReducibleExtensionPolynomial,
  UnsupportedExtension,
  WrongField,
  ZeroElement,
  ZeroPolynomial,
  NotFiniteExtension,
  SyntaxError,
  UnknownVariable,
  InexactDivision,
  ZeroDivisor,
  ImproperFaceIntersection,
  ConstantTermZero,
  WrongModel,
  UndefinedAtPole,
  ModulusNotAvoided,
  UnfactorableEntry,
  IndeterminateCoordinate,
  ImproperBoundary,
  NotPrimePower,
  TooLarge,
  NormNotImplemented,
  SteinbergPrecondition,
  IndistinctEntries,
  NotAGraph,
  WrongLevel,
  NotNormalized,
  DegreeTooHigh,
  NotAdmissible,
  NotPresentable,
  PointOnModulus,
  NonRationalPoint,
  MalformedCertificate,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure with the byte offset into the input text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace chowmod
