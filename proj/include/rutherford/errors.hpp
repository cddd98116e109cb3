#pragma once

#include <stdexcept>
#include <string>

namespace rutherford {

/// Argument outside the domain where a quantity is defined (theta = 0 for
/// the asymptotic forms, r <= r_s for the black-hole potential, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation at a pole of the gamma function.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A series or iteration failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite-difference step cannot resolve the local wavelength.
class StepSizeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace rutherford
