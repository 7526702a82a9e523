#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kempe {

enum class ErrorKind {
  SimpleGraphViolation,
  MalformedRotation,
  NoValidGraph,
  NotAWalk,
  NotClosed,
  LengthMismatch,
  AnchorColorMismatch,
  Unsatisfiable,
  NotIndependent,
  Overlap,
  InvalidPrefix,
  StateCapExceeded,
  SearchExhausted,
  PreconditionViolated,
  TemplateNotContained,
  NotGood,
  NotFourColorable,
  CapExceeded,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Domain error carrying a machine-readable kind. The CLI maps these to
/// exit code 1 with a JSON error object.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace kempe
