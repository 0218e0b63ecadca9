#pragma once

#include <stdexcept>
#include <string>

namespace tfg {

enum class ErrorCode {
  InvalidCodebook,
  CodebookOverflow,
  DomainMismatch,
  OffLanguage,
  BoundsUnsound,
  NotTransitive,
  NotReduced,
  NonCommuting,
  EmptySupport,
  ConstraintUnsatisfiable,
  SearchBudgetExceeded,
  NoMovingPeriodicPoint,
  AssertionFailure,
  InternalInconsistency,
  BadInput,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tfg
