#include "oaf/error.hpp"

namespace oaf {

std::string_view errorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::ReductionDepthExceeded: return "ReductionDepthExceeded";
    case ErrorCode::NotTyped: return "NotTyped";
    case ErrorCode::UnknownIdent: return "UnknownIdent";
    case ErrorCode::NotAFunction: return "NotAFunction";
    case ErrorCode::Mismatch: return "Mismatch";
    case ErrorCode::SubtypeWitnessMissing: return "SubtypeWitnessMissing";
    case ErrorCode::Cycle: return "Cycle";
    case ErrorCode::IllScoped: return "IllScoped";
    case ErrorCode::ExtensionDisabled: return "ExtensionDisabled";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::InvalidDeclaration: return "InvalidDeclaration";
    case ErrorCode::InvalidDependency: return "InvalidDependency";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::ArityUnsupported: return "ArityUnsupported";
    case ErrorCode::EmptyCorpus: return "EmptyCorpus";
    case ErrorCode::Malformed: return "Malformed";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::UnsupportedVersion: return "UnsupportedVersion";
    case ErrorCode::EmptyOutput: return "EmptyOutput";
    case ErrorCode::DanglingIdent: return "DanglingIdent";
    case ErrorCode::UnificationFailure: return "UnificationFailure";
    case ErrorCode::AmbiguousType: return "AmbiguousType";
    case ErrorCode::UnassignedConstant: return "UnassignedConstant";
  }
  return "Unknown";
}

}  // namespace oaf
