#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace machh {

enum class ErrorCode {
  kParseError,
  kVertexOutOfRange,
  kGhostVertex,
  kNotAVertex,
  kFaceAlreadyPresent,
  kBoundaryMissing,
  kBadSigma,
  kNotApplicable,
  kNotInSubset,
  kResourceLimit,
  kInvalidArgument,
  kInternalInconsistency,
};

/// Stable identifier used in diagnostics, e.g. "GhostVertex".
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace machh
