#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace resnet {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A network violates a structural invariant (self-loop, zero resistance,
/// unflagged negative resistance, bad vertex id, duplicate label).
class MalformedNetwork : public Error {
 public:
  using Error::Error;
};

/// Edge-list text could not be parsed.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class DisconnectedNetwork : public Error {
 public:
  using Error::Error;
};

/// The grounded system has no usable pivot. Only reachable with gadget
/// (negative) edges.
class SingularSystem : public Error {
 public:
  SingularSystem(std::size_t pivot, const std::string& what)
      : Error(what), pivot_(pivot) {}
  std::size_t pivot() const noexcept { return pivot_; }

 private:
  std::size_t pivot_;
};

/// A rewrite was requested whose precondition does not hold.
class ReductionError : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace resnet
