#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace posr {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tables of the wrong shape, out-of-range entries, bad labels.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Well-formed tables that break one of the po-semiring (or ring) axioms.
class InvalidInstance : public Error {
 public:
  using Error::Error;
};

/// An element argument outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The hypotheses of a structural statement fail on this instance.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Raised when a decomposition that must exist does not. Carries the
/// offending elements so the failure can be replayed.
class Counterexample : public Error {
 public:
  Counterexample(const std::string& what, std::vector<unsigned> witness)
      : Error(what), witness_(std::move(witness)) {}
  const std::vector<unsigned>& witness() const noexcept { return witness_; }

 private:
  std::vector<unsigned> witness_;
};

class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

}  // namespace posr
