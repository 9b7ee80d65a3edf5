#pragma once

#include <stdexcept>
#include <string>

namespace cubical {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input (bad term, index, arity, JSON, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A request that exceeds a size cap or search budget.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A cellular presentation whose face assignments violate a cubical identity.
class PresentationError : public InputError {
 public:
  using InputError::InputError;
};

/// An operation that needs structure the chosen theory does not have (e.g. reversal without De Morgan).
class UnsupportedTheoryError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace cubical
