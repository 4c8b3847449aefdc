#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polar {

/// Broad failure classes; the CLI maps them onto exit codes 2, 3 and 4.
enum class ErrorKind {
  Input,        // malformed or out-of-contract input
  Genericity,   // a random choice landed on a bad locus and retries ran out
  Consistency,  // two routes that must agree did not
};

class PolarError : public std::runtime_error {
 public:
  PolarError(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// Stable machine-readable identifier, e.g. "unknown_variable".
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

class ParseError : public PolarError {
 public:
  ParseError(std::size_t position, const std::string& message)
      : PolarError(ErrorKind::Input, "syntax_error",
                   "syntax error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] inline void throwInput(std::string code, const std::string& message) {
  throw PolarError(ErrorKind::Input, std::move(code), message);
}

[[noreturn]] inline void throwGenericity(std::string code, const std::string& message) {
  throw PolarError(ErrorKind::Genericity, std::move(code), message);
}

[[noreturn]] inline void throwConsistency(std::string code, const std::string& message) {
  throw PolarError(ErrorKind::Consistency, std::move(code), message);
}

}  // namespace polar
