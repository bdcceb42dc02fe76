#pragma once

#include <stdexcept>
#include <string>

namespace topdeg {

// Failure modes callers are expected to branch on.  The CLI maps these to
// process exit codes; library users can catch Error and switch on kind().
enum class ErrorKind {
  RingMismatch,      // operands live in different variable rings
  AlgebraMismatch,   // elements of different quotient algebras combined
  Parse,             // polynomial or problem-file syntax error
  Validation,        // well-formed input violating a precondition
  InfiniteDimension, // quotient algebra is not finite-dimensional
  NotComaximal,      // quotient ideal and excluded ideal share a complex zero
  SingularBezoutian, // dual-basis matrix not invertible
  DegenerateU,       // half-space weight vanishes at a zero: det Psi_T = 0
  DegeneratePhiPsi,  // chosen functional gives det Psi = 0
  Genericity,        // random search for (u, phi) exhausted its retries
  OddSignature,      // even-codimension signature came out odd
  NonIntegerResult,  // half-space signature sum came out odd
  TimeBudget,        // soft deadline exceeded
  Internal,          // invariant breach: a bug, not a user error
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) {
  throw Error(k, msg);
}

} // namespace topdeg
