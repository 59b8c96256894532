#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace loopswap {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. Carries the 1-based line where parsing stopped.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A graph that violates the data-model invariants (range, weight bound).
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

// The input contains a directed cycle of negative total weight.
class NegativeCycleError : public Error {
 public:
  using Error::Error;
};

// A finite sum left [-kWeightMax, kWeightMax].
class ArithmeticOverflow : public Error {
 public:
  using Error::Error;
};

// An internal postcondition failed; indicates a violated precondition upstream.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// A brute-force oracle was asked to work beyond its configured size cap.
class ResourceGuard : public Error {
 public:
  using Error::Error;
};

}  // namespace loopswap
