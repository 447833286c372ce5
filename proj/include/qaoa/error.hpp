#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qaoa {

enum class Errc {
  InvalidProbability,
  AttemptsExhausted,
  ParseError,
  DuplicateEdge,
  SelfLoop,
  VertexOutOfRange,
  QubitOutOfRange,
  ControlEqualsTarget,
  InvalidAngle,
  Disconnected,
  EdgeMismatch,
  TooLarge,
  TooManyQubits,
  DimensionMismatch,
  InvalidParams,
  InvalidReduction,
  InvalidDevice,
  InvalidTrials,
  Io,
};

std::string_view to_string(Errc code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Parse failure; line() is 1-based, 0 when the error is not tied to a line.
class ParseError : public Error {
 public:
  ParseError(Errc code, std::size_t line, const std::string& what)
      : Error(code, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace qaoa
