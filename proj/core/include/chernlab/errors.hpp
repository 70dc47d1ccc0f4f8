#pragma once

#include <stdexcept>
#include <string>

namespace chernlab {

// Base of every exception thrown by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class ContextMismatch : public Error {
 public:
  ContextMismatch() : Error("operands live in different polynomial rings") {}
};

class NotHomogeneous : public Error {
 public:
  using Error::Error;
};

class NotFiniteLength : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// Raised when an exact computation produced something the identities rule out.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace chernlab
