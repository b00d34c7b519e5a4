#pragma once

#include <stdexcept>
#include <string>

namespace hsqm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live on different truncations or have non-conformable shapes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Inputs outside the model's admissible parameter region.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// A density operator with a (numerically) vanishing eigenvalue.
class NotFaithful : public Error {
 public:
  using Error::Error;
};

}  // namespace hsqm
