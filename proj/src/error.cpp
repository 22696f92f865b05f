#include "chowmod/error.hpp"

namespace chowmod {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorCode::ReducibleExtensionPolynomial: return "ReducibleExtensionPolynomial";
    case ErrorCode::UnsupportedExtension: return "UnsupportedExtension";
    case ErrorCode::WrongField: return "WrongField";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotFiniteExtension: return "NotFiniteExtension";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::ZeroDivisor: return "ZeroDivisor";
    case ErrorCode::ImproperFaceIntersection: return "ImproperFaceIntersection";
    case ErrorCode::ConstantTermZero: return "ConstantTermZero";
    case ErrorCode::WrongModel: return "WrongModel";
    case ErrorCode::UndefinedAtPole: return "UndefinedAtPole";
    case ErrorCode::ModulusNotAvoided: return "ModulusNotAvoided";
    case ErrorCode::UnfactorableEntry: return "UnfactorableEntry";
    case ErrorCode::IndeterminateCoordinate: return "IndeterminateCoordinate";
    case ErrorCode::ImproperBoundary: return "ImproperBoundary";
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NormNotImplemented: return "NormNotImplemented";
    case ErrorCode::SteinbergPrecondition: return "SteinbergPrecondition";
    case ErrorCode::IndistinctEntries: return "IndistinctEntries";
    case ErrorCode::NotAGraph: return "NotAGraph";
    case ErrorCode::WrongLevel: return "WrongLevel";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::NotPresentable: return "NotPresentable";
    case ErrorCode::PointOnModulus: return "PointOnModulus";
    case ErrorCode::NonRationalPoint: return "NonRationalPoint";
    case ErrorCode::MalformedCertificate: return "MalformedCertificate";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

SyntaxError::SyntaxError(std::size_t position, const std::string& message)
    : Error(ErrorCode::SyntaxError, "at position " + std::to_string(position) + ": " + message),
      position_(position) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace chowmod
