#pragma once

#include <stdexcept>
#include <string>

namespace constrict {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or inconsistent input data (bad rationals, invariant violations).
struct ValidationError : Error {
  using Error::Error;
};

/// Two objects that must live on the same state space do not.
struct DomainMismatchError : Error {
  using Error::Error;
};

/// Conditioning on evidence that carries no probability where it must.
struct ConditioningError : Error {
  using Error::Error;
};

/// A computation was refused because the instance exceeds a size guard.
struct SizeError : Error {
  using Error::Error;
};

/// An assessment or selection is incompatible with coherence constraints.
struct CoherenceError : Error {
  using Error::Error;
};

}  // namespace constrict
