#pragma once

#include <stdexcept>

namespace noon {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Photon numbers or matrix dimensions do not match.
struct DimensionError : Error {
  using Error::Error;
};

// An exact computation was requested above its configured size cap.
struct CapacityError : Error {
  using Error::Error;
};

// Conditioning on the extreme-Fock subspace was requested but the state
// carries no weight there.
struct DegenerateSubspaceError : Error {
  using Error::Error;
};

// delta = 0 has no finite optimal photon number (the bound is monotone 1/N).
struct UnboundedOptimumError : Error {
  using Error::Error;
};

// Fisher information is undefined: an outcome has zero probability but a
// nonzero slope at the evaluation point.
struct SingularOutcomeError : Error {
  using Error::Error;
};

// Generic precondition violation (bad sizes, negative variance, empty
// counts, degenerate intervals, ...).
struct InvalidArgumentError : Error {
  using Error::Error;
};

}  // namespace noon
