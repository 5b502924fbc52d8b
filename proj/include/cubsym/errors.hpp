#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cubsym {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematically invalid request: division by zero, singular matrix,
/// unknown catalog name, malformed input.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A computation hit one of its configured caps (closure size, projective
/// order, S-polynomial count). Never reported as an answer.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, std::size_t partial)
      : Error(what), partial_(partial) {}
  std::size_t partial() const noexcept { return partial_; }

 private:
  std::size_t partial_;
};

class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : DomainError(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

}  // namespace cubsym
