#pragma once

#include <stdexcept>
#include <string>

namespace covmat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A subsystem index or index set does not fit the state's dims.
class InvalidSubsystem : public Error {
 public:
  using Error::Error;
};

/// Shapes of two operands (or a basis and a subsystem) disagree.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// The operation needs exactly two parties.
class NotBipartite : public Error {
 public:
  using Error::Error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

/// A matrix failed a DensityMatrix invariant. `invariant()` names it and
/// `residual()` is the measured violation.
class InvalidState : public Error {
 public:
  InvalidState(std::string invariant, double residual, const std::string& what)
      : Error(what), invariant_(std::move(invariant)), residual_(residual) {}

  const std::string& invariant() const noexcept { return invariant_; }
  double residual() const noexcept { return residual_; }

 private:
  std::string invariant_;
  double residual_;
};

/// Any other violated precondition (bad parameter, empty grid, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace covmat
