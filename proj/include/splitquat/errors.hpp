#pragma once

#include <stdexcept>
#include <string>

namespace splitquat {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands disagree in quaternion signature or scalar backend.
class MismatchError : public Error {
 public:
  using Error::Error;
};

// Division by a zero (or, in the float backend, near-zero) norm.
class NonInvertible : public Error {
 public:
  using Error::Error;
};

// Input violates one of the genericity assumptions of the factorization
// algorithm. The CLI maps this to exit code 2.
class NonGeneric : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

// A geometric construction collapsed (zero representative, identical
// points, null mirror, ...).
class Degenerate : public Error {
 public:
  using Error::Error;
};

// Quadrance was requested for a point on the null circle.
class NullPoint : public Error {
 public:
  using Error::Error;
};

}  // namespace splitquat
