#include "conifold/error.hpp"

namespace conifold {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::NonRationalCoefficient: return "NonRationalCoefficient";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::OriginRay: return "OriginRay";
    case ErrorKind::NonIsolated: return "NonIsolated";
    case ErrorKind::QuantumRegion: return "QuantumRegion";
    case ErrorKind::IncompleteReport: return "IncompleteReport";
    case ErrorKind::WrongModel: return "WrongModel";
    case ErrorKind::BranchPoint: return "BranchPoint";
    case ErrorKind::MalformedIncidence: return "MalformedIncidence";
    case ErrorKind::ExactnessViolation: return "ExactnessViolation";
    case ErrorKind::Resource: return "ResourceLimit";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

}  // namespace conifold
