#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coringlab {

enum class ErrorCode {
  BadShape,
  NotPrime,
  NotAssociative,
  NoUnit,
  NotAUnit,
  NotASubring,
  TooLarge,
  NotAGroup,
  NotAnAutomorphism,
  NotAnAction,
  NotARepresentation,
  ActionsDoNotCommute,
  NotBilinear,
  NotCoassociative,
  CounitFails,
  NotAGrouplike,
  NotACocycle,
  NotGalois,
  NotHopf,
  NotComoduleAlgebra,
  ParseError,
  ValidationError,
  UnknownTask,
};

std::string_view error_code_name(ErrorCode code);

// Every failure in the library is reported through this type. The message
// carries the witness (basis indices, offending element) when there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace coringlab
