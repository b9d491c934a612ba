#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fsieve {

enum class ErrorKind {
  InvalidArgument,
  NonIntegralReduction,
  SingularModel,
  FieldTooLarge,
  FactorizationIncomplete,
  NotASolution,
  DegenerateRadical,
  UnhandledCase,
  IncompleteTable,
  MissingEigenvalue,
  HypothesisViolated,
  MissingTermImplementation,
  ParseError,
  InvariantViolation,
  NetworkUnavailable,
  SchemaMismatch,
  ScanExhausted,
  MissingExternalData,
};

std::string_view to_string(ErrorKind kind);

// Process exit code for the CLI: 2 invalid input, 3 unresolved, 4 missing
// external data.
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace fsieve
