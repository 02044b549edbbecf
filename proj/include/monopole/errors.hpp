#pragma once

#include <stdexcept>
#include <string>

namespace monopole {

// Argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// A numerical procedure (quadrature, root bracketing) failed to converge.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Evaluation too close to a pole (lattice point, discriminant zero, w = z).
struct PoleError : NumericError {
  using NumericError::NumericError;
};

// Two independent computations disagree beyond tolerance.
struct IntegrityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input is valid but not in the configuration an operation supports,
// e.g. three real roots where a conjugate pair is required.
struct ConfigurationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact computation would exceed the configured size budget.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace monopole
