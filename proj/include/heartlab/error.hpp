#pragma once

#include <stdexcept>
#include <string>

namespace heartlab {

enum class ErrorCode {
  NonAdmissible,
  BadRelation,
  BadInput,
  BadClass,
  IncompleteCatalog,
  Unsupported,
  DuplicateEntry,
  NotIndecomposable,
  NotTwin,
  MissingProjectives,
  NotExtensionClosed,
  NotInBMinus,
  NotInBPlus,
  HypothesisNotMet,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace heartlab
