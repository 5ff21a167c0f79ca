#pragma once

#include <stdexcept>
#include <string>

namespace rankone {

enum class ErrorCode {
  WrongLength,
  OrderingViolation,
  GroupMismatch,
  NotContained,
  BoundTooSmall,
  EmptyCandidateSet,
  DomainError,
  PoleEncountered,
  Overflow,
  SingularPoint,
  SupportOutsideInterval,
  GridHitsAtom,
  InvalidModel,
  ParseError,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rankone
