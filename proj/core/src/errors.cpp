#include "zkscholar/errors.hpp"

namespace zks {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo: return "io-error";
    case ErrorCode::kConfig: return "config-error";
    case ErrorCode::kUsage: return "usage-error";
    case ErrorCode::kRange: return "range-error";
    case ErrorCode::kNotFound: return "not-found";
    case ErrorCode::kAuthorizationDenied: return "authorization-denied";
    case ErrorCode::kWindowClosed: return "window-closed";
    case ErrorCode::kDuplicateApplication: return "duplicate-application";
    case ErrorCode::kUnknownCaKey: return "unknown-ca-key";
    case ErrorCode::kProofInvalid: return "proof-invalid";
    case ErrorCode::kTooEarly: return "too-early";
    case ErrorCode::kNotAdmin: return "not-admin";
    case ErrorCode::kAlreadySet: return "already-set";
    case ErrorCode::kBadProof: return "bad-proof";
    case ErrorCode::kAlreadyClaimed: return "already-claimed";
    case ErrorCode::kRootsNotSet: return "roots-not-set";
    case ErrorCode::kNotAwarded: return "not-awarded";
    case ErrorCode::kMalformedCredential: return "malformed-credential";
    case ErrorCode::kConstraintViolation: return "constraint-violation";
    case ErrorCode::kTupleInvalid: return "tuple-invalid";
    case ErrorCode::kArityMismatch: return "arity-mismatch";
    case ErrorCode::kStoreCorrupt: return "store-corrupt";
    case ErrorCode::kKycRequired: return "kyc-required";
    case ErrorCode::kAuditMismatch: return "audit-mismatch";
  }
  return "unknown-error";
}

int exit_code(ErrorCode code) {
  return static_cast<int>(code);
}

}  // namespace zks
