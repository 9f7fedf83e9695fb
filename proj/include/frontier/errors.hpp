#pragma once

#include <stdexcept>
#include <string>

namespace frontier {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line` is 1-based when known, 0 otherwise.
class ParseError : public Error {
public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

/// Input values violate a documented domain constraint.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Input is well-formed but lacks required entries.
class IncompleteDataError : public Error {
public:
  using Error::Error;
};

/// No feasible solution exists for the given constraints.
class InfeasibleError : public Error {
public:
  using Error::Error;
};

} // namespace frontier
