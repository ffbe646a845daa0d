#pragma once

#include <stdexcept>
#include <string>

namespace omegalie {

enum class ErrorCode {
  DimMismatch,
  AxiomViolation,
  Precondition,
  EmptyDecomposition,
  EmptyParameterSpace,
  ParseError,
  UnknownKind,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline void require_dims(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::DimMismatch, what);
}

}  // namespace omegalie
