#pragma once

#include <stdexcept>
#include <string>

namespace qci {

enum class Err {
  NonPrime,
  ExtensionTooLarge,
  BadOrder,
  BadExponents,
  BadTruncation,
  RegimeConflict,
  RelationViolated,
  NilpotencyViolated,
  ZeroLinearPart,
  D2NonZero,
  LiftResidue,
  WindowTooSmall,
  WindowOutOfRange,
  EnumerationTooLarge,
  WrongRegime,
  PreconditionViolated,
  ZeroModule,
  ParseError,
  ValidationError,
  UnknownCommand,
  Internal,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
  Error(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}
  Err code() const { return code_; }

private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

// Internal consistency checks that must hold for every valid input.
inline void check(bool ok, Err code, const std::string& msg) {
  if (!ok) fail(code, msg);
}

}  // namespace qci
