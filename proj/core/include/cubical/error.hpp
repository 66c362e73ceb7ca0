#pragma once

#include <stdexcept>
#include <string>

namespace cubical {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A generator index, sign or dimension outside its legal range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Two maps whose domain and codomain do not line up.
class CompositionError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on inputs violating its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A presheaf or presheaf map whose tables break an identity.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace cubical
