#pragma once

#include <stdexcept>
#include <string>

namespace hmcl {

// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Mismatched tensor shapes or extents.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Mathematically invalid input (log of non-positive, zero-norm vector, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Out-of-bounds coordinate or unknown key.
class IndexError : public Error {
 public:
  using Error::Error;
};

// NaN or Inf surfaced by an operation.
class NumericError : public Error {
 public:
  using Error::Error;
};

// Invalid API usage (double backward, non-scalar loss, missing grad, ...).
class StateError : public Error {
 public:
  using Error::Error;
};

// Invalid configuration value or document.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// File format or filesystem failure.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace hmcl
