#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coronalab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph input (bad edge list or DIMACS text).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  /// 1-based line number; 0 when the error is not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An exact solver was asked for an instance above its configured cap.
class SizeLimitError : public Error {
 public:
  SizeLimitError(const std::string& solver, std::size_t order, std::size_t cap)
      : Error(solver + ": instance of order " + std::to_string(order) +
              " exceeds cap " + std::to_string(cap)),
        cap_(cap) {}

  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// Input violates an operation precondition (e.g. disconnected graph).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A closed formula or construction was requested outside its hypothesis.
class InapplicableError : public Error {
 public:
  using Error::Error;
};

/// A constructed witness failed its own feasibility re-check.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// A witness handed to a validator does not cover the graph.
class MalformedWitnessError : public Error {
 public:
  using Error::Error;
};

}  // namespace coronalab
