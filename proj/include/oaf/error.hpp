#ifndef OAF_ERROR_HPP
#define OAF_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace oaf {

// Every failure raised anywhere in the toolchain carries one of these codes.
// Reports that collect failures (CheckReport, ImportReport) store the code
// rather than the exception object.
enum class ErrorCode {
  // kernel
  ReductionDepthExceeded,
  NotTyped,
  UnknownIdent,
  NotAFunction,
  Mismatch,
  SubtypeWitnessMissing,
  Cycle,
  IllScoped,
  ExtensionDisabled,
  DuplicateName,
  InvalidDeclaration,
  InvalidDependency,
  // framework extensions
  ArityMismatch,
  ArityUnsupported,
  // encodings
  EmptyCorpus,
  // formats
  Malformed,
  SchemaViolation,
  UnsupportedVersion,
  EmptyOutput,
  DanglingIdent,
  // annotation inference
  UnificationFailure,
  AmbiguousType,
  // morphisms
  UnassignedConstant,
};

std::string_view errorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  // `detail` is the machine-readable payload: a schema path, an identifier,
  // a line number. It is empty when the code says everything.
  Error(ErrorCode code, std::string message, std::string detail = {})
      : std::runtime_error(std::move(message)),
        code_(code),
        detail_(std::move(detail)) {}

  ErrorCode code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace oaf

#endif  // OAF_ERROR_HPP
