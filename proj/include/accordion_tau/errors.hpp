#pragma once

#include <stdexcept>
#include <string>

namespace accordion_tau {

enum class ErrorCode {
  InvalidArgument,
  AdjacentVertices,
  CrossingPair,
  DuplicateDiagonal,
  NotAccordion,
  NotCrossed,
  EmptyDissection,
  NotNested,
  EmptySubset,
  InfiniteDimensional,
  BandDetected,
  NotGentle,
  NonPure,
  AlgebraMismatch,
  LabelLengthMismatch,
  SizeLimit,
  Parse,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so the
// C API can map it onto a status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace accordion_tau
