#pragma once

#include <stdexcept>
#include <string>

namespace sheafccz {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic outside an operation's domain (e.g. inverse of zero).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Dimension or length mismatch between operands.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A subspace was expected to contain another one and does not.
class ContainmentError : public Error {
 public:
  using Error::Error;
};

/// Input data fails a structural requirement (non-commuting generators, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A cell, code name or file was not found.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// An identity that must hold by construction was violated.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

/// Malformed configuration or command-line input.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace sheafccz
