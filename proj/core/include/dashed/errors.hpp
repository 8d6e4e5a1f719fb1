#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dashed {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input. offset() is the 0-based character position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// A value violates the invariant of the type being constructed.
class InvariantError : public Error {
 public:
  using Error::Error;
};

class NonDecreasingPattern : public Error {
 public:
  using Error::Error;
};

class ClassTooLarge : public Error {
 public:
  using Error::Error;
};

// Raised by extremal_word when the oracle is not a partial order.
class NotUnique : public Error {
 public:
  using Error::Error;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

class NotMinimal : public Error {
 public:
  using Error::Error;
};

class IterationCapExceeded : public Error {
 public:
  using Error::Error;
};

class AlphabetViolation : public Error {
 public:
  using Error::Error;
};

class NotAPermutation : public Error {
 public:
  using Error::Error;
};

class UnknownStatistic : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace dashed
