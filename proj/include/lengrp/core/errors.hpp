#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lengrp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (wrong determinant, mismatched
/// contexts, constant polynomial, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A search ran out of its state budget or radius. Carries the last radius
/// that was fully explored.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, std::size_t completed_radius)
      : Error(what), completed_radius_(completed_radius) {}

  std::size_t completed_radius() const noexcept { return completed_radius_; }

 private:
  std::size_t completed_radius_;
};

/// Floating-point computation could not produce a trustworthy answer.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace lengrp
