#pragma once

#include <stdexcept>
#include <string>

namespace copula_transport {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameter outside its documented range (resolution, epsilon, k, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Input data violating a type invariant: non-finite entries, shape
// mismatches, malformed files.
class DataError : public Error {
 public:
  using Error::Error;
};

// Underflow, non-convergence that cannot be reported as a status, or an
// internal solver defect.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace copula_transport
