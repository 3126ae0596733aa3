#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace holozeta {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. Carries the byte offset when known.
class ParseError : public Error {
 public:
  ParseError(std::string const& msg, std::size_t offset = npos)
      : Error(offset == npos ? msg : msg + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Shapes that do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Well-formed input violating a semantic precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Reference to an unknown generator, vertex, edge or relation.
class LookupError : public Error {
 public:
  using Error::Error;
};

// A move or rewrite whose pattern does not match its site.
class InvalidMove : public Error {
 public:
  using Error::Error;
};

}  // namespace holozeta
