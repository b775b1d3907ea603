#pragma once

#include <stdexcept>
#include <string>

namespace effrank {

enum class ErrorCode {
  MalformedHeader,
  NonNumericValue,
  NonPositiveInput,
  UnevenRepeats,
  TooFewSetups,
  DimensionMismatch,
  NumericalFailure,
  SolverFailure,
  EmptySample,
  UnequalSampleCounts,
  InconsistentSetups,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace effrank
