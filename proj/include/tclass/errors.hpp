#pragma once

#include <stdexcept>
#include <string>

namespace tclass {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A group element coordinate is not a member of its component.
class MalformedElement : public Error {
 public:
  using Error::Error;
};

// A cut literal with an out-of-range level or a boundary of the wrong length.
class MalformedCut : public Error {
 public:
  using Error::Error;
};

// Operands live over different value groups or different models.
class DomainMismatch : public Error {
 public:
  using Error::Error;
};

class UndefinedQuotient : public Error {
 public:
  using Error::Error;
};

class NotInGroup : public Error {
 public:
  using Error::Error;
};

class NotIdempotent : public Error {
 public:
  using Error::Error;
};

// An arithmetic identity that holds mathematically failed to hold; this
// always signals a bug in the cut arithmetic.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace tclass
