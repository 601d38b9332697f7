#pragma once

#include <stdexcept>
#include <string>

namespace zks {

// Every distinct protocol failure gets its own code so the CLI can map it to
// a stable exit status and a machine-parsable diagnostic.
enum class ErrorCode {
  kIo = 1,
  kConfig,
  kUsage,
  kRange,
  kNotFound,
  kAuthorizationDenied,
  kWindowClosed,
  kDuplicateApplication,
  kUnknownCaKey,
  kProofInvalid,
  kTooEarly,
  kNotAdmin,
  kAlreadySet,
  kBadProof,
  kAlreadyClaimed,
  kRootsNotSet,
  kNotAwarded,
  kMalformedCredential,
  kConstraintViolation,
  kTupleInvalid,
  kArityMismatch,
  kStoreCorrupt,
  kKycRequired,
  kAuditMismatch,
};

const char* error_name(ErrorCode code);

/// Stable process exit status for a failure code (0 is success, 1 is kIo).
int exit_code(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace zks
