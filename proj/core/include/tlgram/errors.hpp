#ifndef TLGRAM_ERRORS_HPP
#define TLGRAM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tlgram {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameter exceeds the configured enumeration or matrix limits.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

// Structurally invalid input: ground-set mismatch, broken symmetry,
// a crossing partition where a non-crossing one is required, an
// unrealizable annular diagram, and the like.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Raised when a division that must be exact leaves a remainder.
// Reaching this from fraction-free elimination indicates a bug.
class InexactDivisionError : public Error {
 public:
  using Error::Error;
};

// Safety net against runaway exponent growth; never a semantic limit.
class ExponentCapError : public Error {
 public:
  using Error::Error;
};

}  // namespace tlgram

#endif  // TLGRAM_ERRORS_HPP
