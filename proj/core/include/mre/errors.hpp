#pragma once

#include <stdexcept>
#include <string>

namespace mre {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A state vector whose squared norm differs from 1.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

/// A matrix that is not Hermitian, not unit-trace, or not positive semidefinite.
class NonPhysicalError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of a function (probabilities outside [0,1], ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A closed form evaluated outside the entangled regime it is valid for.
class RegimeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed input that is neither a physics nor a domain violation.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Text that is not valid JSON or does not have the expected layout.
class ParseError : public InputError {
 public:
  using InputError::InputError;
};

/// Mixing matrix that is not an isometry.
class ParametrizationError : public Error {
 public:
  using Error::Error;
};

/// Ensemble that does not reproduce the density matrix it is paired with.
class DecompositionError : public Error {
 public:
  using Error::Error;
};

/// Kraus set violating the completeness relation.
class CompletenessError : public Error {
 public:
  using Error::Error;
};

/// Kraus branch with vanishing probability.
class AnnihilatedBranchError : public Error {
 public:
  using Error::Error;
};

/// Kraus set outside the A^dag A, B^dag B proportional-to-identity class.
class RestrictionError : public Error {
 public:
  using Error::Error;
};

}  // namespace mre
