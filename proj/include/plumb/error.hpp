#pragma once

#include <stdexcept>
#include <string>
#include <variant>

namespace plumb {

/// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed braid or graph text, or input that fails load-time validation
/// (loops, odd cycles, unknown vertices, ...).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A well-formed input that violates an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search would exceed the configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A proven invariant failed at runtime. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// A theorem whose hypotheses do not hold for the given input.
struct Inapplicable {
  std::string reason;
};

template <typename T>
using Outcome = std::variant<T, Inapplicable>;

template <typename T>
bool applicable(const Outcome<T>& o) {
  return std::holds_alternative<T>(o);
}

}  // namespace plumb
