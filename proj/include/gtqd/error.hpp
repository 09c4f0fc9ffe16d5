#pragma once

#include <stdexcept>
#include <string>

namespace gtqd {

enum class ErrorKind {
  NonAssociative,
  NotLatinSquare,
  NoIdentity,
  ClosureTooLarge,
  NotACocycle,
  NotA2Cocycle,
  CapExceeded,
  NotInZOmega,
  ResultNotACharacter,
  NotCentral,
  NoUniqueInvolution,
  WellDefinednessFailure,
  SectionNotHomomorphism,
  NonIntegralFusion,
  ConventionFault,
  NotEven,
  NotPositiveDefinite,
  RestrictionFailure,
  Overflow,
  InputError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gtqd
